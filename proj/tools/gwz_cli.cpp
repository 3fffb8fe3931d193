#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwz/absolute.hpp"
#include "gwz/complete_graph.hpp"
#include "gwz/graph_zeta.hpp"

using json = nlohmann::ordered_json;
using namespace gwz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitNumeric = 3;

struct Options {
    std::string family;
    std::string input;
    std::string format = "text";
    double w_re = 0, w_im = 0;
    double s_re = 0, s_im = 0;
    bool have_w = false, have_s = false;
    int trunc = 400;
    int kmax = 40;
    bool dump_matrix = false;
    std::string batch;
};

Graph load_graph(const Options& opt) {
    if (!opt.family.empty() && !opt.input.empty())
        throw ValidationError("give either --family or --input, not both");
    if (!opt.family.empty()) return generate_family(parse_family_spec(opt.family));
    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw ValidationError("cannot open " + opt.input);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_edge_list(buf.str());
    }
    throw ValidationError("no graph given; use --family or --input");
}

json poly_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}};
}

json rf_json(const RationalFunction& f) {
    return json{{"constant", f.constant().get_str()},
                {"num", poly_json(f.num())},
                {"den", poly_json(f.den())},
                {"display", f.to_string()}};
}

json complex_json(Complex z, double abs_err) {
    return json{{"re", z.real()}, {"im", z.imag()}, {"abs_err", abs_err}};
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

json expr_json(const AbsoluteZetaExpression& expr) {
    json terms = json::array();
    for (const auto& t : expr.terms) {
        json omega = json::array();
        for (long o : expr.omega) omega.push_back(o);
        terms.push_back(json{{"order", expr.order},
                             {"shift", t.shift.get_str()},
                             {"omega", omega},
                             {"exponent", t.exponent}});
    }
    return json{{"sign", expr.sign},
                {"automorphy_C", expr.C},
                {"weight_D", expr.D.get_str()},
                {"terms", terms}};
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_gen(const Options& opt) {
    Graph g = load_graph(opt);
    json ej = json::array();
    for (auto& [u, v] : g.edges()) ej.push_back(json::array({u, v}));
    emit(opt, json{{"n", g.num_vertices()}, {"edges", ej}}, g.serialize());
    return kExitOk;
}

std::string cyclotomic_display(const CyclotomicForm& cf) {
    auto side = [](const std::vector<long>& ks) {
        std::ostringstream out;
        long prev = 0;
        int count = 0;
        auto flush = [&]() {
            if (count == 0) return;
            out << "(u^" << prev << "-1)";
            if (count > 1) out << "^" << count;
        };
        for (long k : ks) {
            if (k == prev) {
                ++count;
                continue;
            }
            flush();
            prev = k;
            count = 1;
        }
        flush();
        return out.str();
    };
    std::ostringstream out;
    if (cf.sign < 0) out << "-";
    if (cf.half_exponent != 0) out << "u^(" << cf.half_exponent << "/2)*";
    std::string num = side(cf.m_list), den = side(cf.n_list);
    out << (num.empty() ? "1" : num);
    if (!den.empty()) out << "/" << den;
    return out.str();
}

int cmd_zeta(const Options& opt) {
    Graph g = load_graph(opt);
    RationalFunction z = grover_zeta(g);
    std::string factored_str;
    try {
        factored_str = cyclotomic_display(to_cyclotomic_form(z));
    } catch (const NotRepresentable&) {
        factored_str = factor_unit_basis(z, std::max(1, 2 * g.num_edges())).to_string();
    }
    json j{{"zeta", rf_json(z)}, {"factored", factored_str}};
    std::ostringstream text;
    text << "zeta_U = " << factored_str << "\n"
         << "       = " << z.to_string() << "\n";
    if (opt.dump_matrix) {
        ArcTable arcs(g);
        j["grover_matrix"] = matrix_json(grover_matrix(g, arcs));
        text << "(matrix in JSON output only)\n";
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_ihara(const Options& opt) {
    Graph g = load_graph(opt);
    RationalFunction a = ihara_zeta(g, IharaMethod::IharaExpression);
    RationalFunction b = ihara_zeta(g, IharaMethod::PositiveSupport);
    bool equal = a == b;
    json j{{"ihara_expression", rf_json(a)},
           {"positive_support", rf_json(b)},
           {"equal", equal}};
    std::ostringstream text;
    text << "Ihara expression route:    " << a.to_string() << "\n"
         << "positive-support route:    " << b.to_string() << "\n"
         << "equal: " << (equal ? "yes" : "NO") << "\n";
    emit(opt, j, text.str());
    return equal ? kExitOk : kExitVerification;
}

int cmd_spectrum(const Options& opt) {
    Graph g = load_graph(opt);
    json j;
    std::ostringstream text;
    try {
        SpectrumMultiset spec = grover_spectrum(g);
        json entries = json::array();
        for (const auto& e : spec.entries) {
            const char* part = e.part == SpectrumPart::RW ? "RW" : "RWc";
            entries.push_back(json{{"value", e.value.to_string()},
                                   {"multiplicity", e.multiplicity},
                                   {"part", part}});
            text << "[" << e.value.to_string() << "]^" << e.multiplicity << " (" << part
                 << ")\n";
        }
        j["entries"] = entries;
        j["total_multiplicity"] = spec.total_multiplicity();
        j["eigenvalue_product"] = spec.eigenvalue_product().get_str();
        text << "total " << spec.total_multiplicity() << ", product "
             << spec.eigenvalue_product().get_str() << "\n";
    } catch (const UnsupportedSpectrum& e) {
        j["unsupported"] = true;
        j["p_char_poly"] = poly_json(e.p_char_poly);
        text << "spectrum outside the rational tower; char poly of P: "
             << e.p_char_poly.to_string("x") << "\n";
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int verify_one(const Graph& g, json& j, std::ostream& text) {
    VerificationReport ks = konno_sato_verify(g);
    bool ihara_equal = ihara_zeta(g, IharaMethod::IharaExpression) ==
                       ihara_zeta(g, IharaMethod::PositiveSupport);
    RationalFunction z = grover_zeta(g);
    AutomorphicWeight w = automorphic_weight(z);
    ArcTable arcs(g);
    Rational det_u = determinant(grover_matrix(g, arcs));
    bool weight_ok = w.D == -2 * g.num_edges() && Rational(w.C) == det_u;
    bool ok = ks.equal && ihara_equal && weight_ok;
    j = json{{"konno_sato_equal", ks.equal},
             {"ihara_routes_equal", ihara_equal},
             {"weight", json{{"C", w.C}, {"D", w.D}}},
             {"det_U", det_u.get_str()},
             {"weight_matches_det_and_2m", weight_ok},
             {"ok", ok}};
    text << "Konno-Sato identity: " << (ks.equal ? "ok" : "MISMATCH") << "\n"
         << "Ihara routes:        " << (ihara_equal ? "ok" : "MISMATCH") << "\n"
         << "weight (C, D) = (" << w.C << ", " << w.D << "), det U = " << det_u.get_str()
         << ", expected (det U, -2m): " << (weight_ok ? "ok" : "MISMATCH") << "\n";
    return ok ? kExitOk : kExitVerification;
}

int cmd_verify(const Options& opt) {
    if (!opt.batch.empty()) {
        json all = json::array();
        std::ostringstream text;
        int rc = kExitOk;
        for (const auto& entry : std::filesystem::directory_iterator(opt.batch)) {
            if (!entry.is_regular_file()) continue;
            std::ifstream in(entry.path());
            std::stringstream buf;
            buf << in.rdbuf();
            Graph g = parse_edge_list(buf.str());
            json j;
            text << "== " << entry.path().filename().string() << "\n";
            int one = verify_one(g, j, text);
            j["file"] = entry.path().filename().string();
            all.push_back(j);
            if (one != kExitOk) rc = one;
        }
        emit(opt, all, text.str());
        return rc;
    }
    Graph g = load_graph(opt);
    json j;
    std::ostringstream text;
    int rc = verify_one(g, j, text);
    emit(opt, j, text.str());
    return rc;
}

int cmd_abszeta(const Options& opt) {
    Graph g = load_graph(opt);
    RationalFunction z = grover_zeta(g);
    json j;
    std::ostringstream text;
    try {
        CyclotomicForm cf = to_cyclotomic_form(z);
        AbsoluteZetaExpression expr = kurokawa_decompose(cf);
        json m = json::array(), n = json::array();
        for (long v : cf.m_list) m.push_back(v);
        for (long v : cf.n_list) n.push_back(v);
        j = json{{"representable", true},
                 {"cyclotomic_form",
                  json{{"sign", cf.sign}, {"ell", cf.half_exponent}, {"m", m}, {"n", n}}},
                 {"expression", expr_json(expr)}};
        text << "f = " << (cf.sign < 0 ? "-" : "") << "prod(x^m - 1)/prod(x^n - 1), ell="
             << cf.half_exponent << "\n"
             << "deg f = D = " << expr.D.get_str() << ", automorphy C = " << expr.C << "\n"
             << "zeta_f(s) = product over " << expr.terms.size() << " terms of Gamma_"
             << expr.order << "(s + shift, omega)^exponent:\n";
        for (const auto& t : expr.terms)
            text << "  shift " << t.shift.get_str() << ", exponent " << t.exponent << "\n";
    } catch (const NotRepresentable& e) {
        j = json{{"representable", false}, {"residual", rf_json(e.residual)}};
        text << "not a product of (x^k - 1) factors; residual " << e.residual.to_string()
             << "\n"
             << "hint: for complete graphs use the `series` subcommand\n";
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_eval(const Options& opt) {
    if (!opt.have_w || !opt.have_s)
        throw ValidationError("eval needs --w and --s");
    Graph g = load_graph(opt);
    RationalFunction z = grover_zeta(g);
    Complex w(opt.w_re, opt.w_im), s(opt.s_re, opt.s_im);
    json j;
    std::ostringstream text;
    MellinResult direct = mellin_Z(z, w, s);
    j["mellin_Z"] = complex_json(direct.value, direct.abs_err);
    text << "Z_f(" << w.real() << (w.imag() ? "+i.." : "") << ", " << s.real()
         << ") [Mellin]   = " << direct.value.real() << " + " << direct.value.imag()
         << "i  (err " << direct.abs_err << ")\n";
    try {
        AbsoluteZetaExpression expr = kurokawa_decompose(to_cyclotomic_form(z));
        Complex viazeta = absolute_hurwitz_Z(expr, w, s);
        Complex logzeta = log_absolute_zeta(expr, s);
        j["decomposed_Z"] = complex_json(viazeta, 1e-9);
        j["log_abs_zeta"] = complex_json(logzeta, 1e-9);
        text << "Z_f same point [decomposition] = " << viazeta.real() << " + "
             << viazeta.imag() << "i\n"
             << "log zeta_f(s) = " << logzeta.real() << " + " << logzeta.imag() << "i\n";
    } catch (const NotRepresentable&) {
        j["decomposed_Z"] = nullptr;
        text << "(no Theorem-4 decomposition for this graph)\n";
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_series(const Options& opt) {
    GraphFamily fam = parse_family_spec(opt.family.empty() ? "complete:4" : opt.family);
    if (fam.kind != FamilyKind::Complete)
        throw ValidationError("series applies to complete graphs, e.g. --family complete:4");
    long n = fam.n1;
    json j;
    std::ostringstream text;
    if (n >= 4) {
        PSeries ps = p_coefficients(n, opt.kmax);
        json coeffs = json::array();
        for (const auto& c : ps.coeffs) coeffs.push_back(c.get_str());
        j["p_series"] = json{{"n", n}, {"coeffs", coeffs}, {"bound", ps.bound()}};
        FormalProductKn fp = formal_product_Kn(n);
        j["formal_product"] =
            json{{"n", fp.n},           {"L", fp.L},
                 {"M", fp.M},           {"free_indices", fp.free_indices},
                 {"doubled_indices", fp.doubled_indices},
                 {"weighted_indices", fp.weighted_indices},
                 {"exponent_rule", fp.exponent_rule},
                 {"regularized_only", fp.regularized_only}};
        text << "P_l for K_" << n << " (bound " << ps.bound() << "):\n";
        for (size_t l = 0; l < ps.coeffs.size() && l <= 12; ++l)
            text << "  P_" << l << " = " << ps.coeffs[l].get_str() << "\n";
        text << "regularized product: M=" << fp.M << " indices (2 free, L=" << fp.L
             << " doubled, " << fp.weighted_indices << " P-weighted), exponent "
             << fp.exponent_rule << " -- symbolic only\n";
    }
    if (opt.have_w && opt.have_s) {
        TruncatedZ t =
            truncated_Z_Kn(n, Complex(opt.w_re, opt.w_im), Complex(opt.s_re, opt.s_im),
                           opt.trunc);
        j["truncated_Z"] = complex_json(t.value, t.tail_estimate);
        text << "truncated Z (K=" << opt.trunc << ") = " << t.value.real() << " + "
             << t.value.imag() << "i, tail <= " << t.tail_estimate << "\n";
    }
    emit(opt, j, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover-walk graph zetas and their absolute zeta functions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family, "family spec, e.g. cycle:5 or bipartite:2,3");
        sub->add_option("--input", opt.input, "edge-list file");
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };

    auto* gen = add_common(app.add_subcommand("gen", "emit an edge list"));
    auto* zeta = add_common(app.add_subcommand("zeta", "Grover-walk zeta"));
    zeta->add_option("--kmax", opt.kmax, "largest unit factor tried");
    zeta->add_flag("--dump-matrix", opt.dump_matrix, "include the Grover matrix");
    auto* ihara = add_common(app.add_subcommand("ihara", "Ihara zeta, both routes"));
    auto* spectrum = add_common(app.add_subcommand("spectrum", "Grover spectrum"));
    auto* verify =
        add_common(app.add_subcommand("verify", "determinant and weight identities"));
    verify->add_option("--batch", opt.batch, "verify every edge list in a directory");
    auto* abszeta =
        add_common(app.add_subcommand("abszeta", "structure-theorem decomposition"));
    auto* eval = add_common(app.add_subcommand("eval", "numeric Z_f and log zeta_f"));
    auto* series = add_common(app.add_subcommand("series", "complete-graph series route"));
    for (CLI::App* sub : {eval, series}) {
        sub->add_option("--w", opt.w_re, "Re of w")->each([&](const std::string&) {
            opt.have_w = true;
        });
        sub->add_option("--wi", opt.w_im, "Im of w");
        sub->add_option("--s", opt.s_re, "Re of s")->each([&](const std::string&) {
            opt.have_s = true;
        });
        sub->add_option("--si", opt.s_im, "Im of s");
    }
    series->add_option("--trunc", opt.trunc, "series truncation");
    series->add_option("--kmax", opt.kmax, "P_l table length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (zeta->parsed()) return cmd_zeta(opt);
        if (ihara->parsed()) return cmd_ihara(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (abszeta->parsed()) return cmd_abszeta(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (series->parsed()) return cmd_series(opt);
    } catch (const ConvergenceError& e) {
        std::cerr << "numeric: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const PoleError& e) {
        std::cerr << "numeric: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
