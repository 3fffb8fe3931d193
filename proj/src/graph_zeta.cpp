#include "gwz/graph_zeta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gwz {

RationalFunction grover_zeta(const Graph& g) {
    ArcTable arcs(g);
    Polynomial det = det_one_minus_u_M(grover_matrix(g, arcs));
    return RationalFunction::from_poly(det).reciprocal();
}

RationalFunction ihara_zeta(const Graph& g, IharaMethod method) {
    int n = g.num_vertices();
    int m = g.num_edges();
    if (method == IharaMethod::PositiveSupport) {
        ArcTable arcs(g);
        BinaryMatrix up = positive_support(grover_matrix(g, arcs));
        Polynomial det = det_one_minus_u_M(up.to_rational());
        return RationalFunction::from_poly(det).reciprocal();
    }
    // Ihara expression: Z^{-1} = (1-u^2)^{gamma-1} det(I - uA + u^2(D-I)).
    auto [a, d] = adjacency_and_degree(g);
    std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational c0 = i == j ? Rational(1) : Rational(0);
            Rational c1 = -a.at(i, j);
            Rational c2 = i == j ? Rational(d.at(i, i) - 1) : Rational(0);
            mat[i][j] = Polynomial({c0, c1, c2});
        }
    Polynomial det = poly_matrix_det(std::move(mat));
    RationalFunction one_minus_u2 =
        RationalFunction::from_poly(Polynomial({Rational(1), Rational(0), Rational(-1)}));
    RationalFunction zinv = one_minus_u2.pow(m - n) * RationalFunction::from_poly(det);
    return zinv.reciprocal();
}

std::vector<long long> reduced_cycle_counts(const Graph& g, int rmax) {
    if (rmax > 12) throw ScaleError("reduced_cycle_counts is a brute-force oracle; rmax <= 12");
    ArcTable arcs(g);
    int na = arcs.num_arcs();
    std::vector<long long> counts(rmax + 1, 0);

    // Outgoing arcs by origin vertex for the DFS.
    std::vector<std::vector<int>> out(g.num_vertices() + 1);
    for (int e = 0; e < na; ++e) out[arcs.arc(e).origin].push_back(e);

    std::vector<int> path;
    auto dfs = [&](auto&& self, int start) -> void {
        int last = path.back();
        int len = static_cast<int>(path.size());
        if (len >= 1 && arcs.arc(last).terminus == arcs.arc(start).origin &&
            arcs.inverse(last) != start && len >= 2) {
            ++counts[len];
        }
        if (len == rmax) return;
        for (int next : out[arcs.arc(last).terminus]) {
            if (next == arcs.inverse(last)) continue;
            path.push_back(next);
            self(self, start);
            path.pop_back();
        }
    };
    for (int start = 0; start < na; ++start) {
        path = {start};
        // Length-1 closed cycles would be loops; simple graphs have none.
        dfs(dfs, start);
    }
    return std::vector<long long>(counts.begin() + 1, counts.end());
}

VerificationReport konno_sato_verify(const Graph& g) {
    VerificationReport report;
    int n = g.num_vertices();
    int m = g.num_edges();
    ArcTable arcs(g);
    report.lhs = det_one_minus_u_M(grover_matrix(g, arcs));

    // det((1+u^2) I - 2u P) = sum_k a_k (1+u^2)^k (2u)^{n-k} over the
    // characteristic polynomial coefficients a_k of P.
    Polynomial cp = char_poly(transition_matrix(g));
    Polynomial one_plus_u2({Rational(1), Rational(0), Rational(1)});
    Polynomial two_u({Rational(0), Rational(2)});
    Polynomial det;
    for (int k = 0; k <= n; ++k) {
        if (cp.coeff(k) == 0) continue;
        det = det + one_plus_u2.pow(k) * two_u.pow(n - k) * cp.coeff(k);
    }
    RationalFunction one_minus_u2 =
        RationalFunction::from_poly(Polynomial({Rational(1), Rational(0), Rational(-1)}));
    report.rhs = one_minus_u2.pow(m - n) * RationalFunction::from_poly(det);
    report.equal = RationalFunction::from_poly(report.lhs) == report.rhs;
    return report;
}

// --- Spectrum ---------------------------------------------------------------

namespace {

// n = s^2 * d with d squarefree.
std::pair<long, long> squarefree_decompose(long n) {
    long s = 1, d = 1;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    d *= n;
    return {s, d};
}

std::vector<Integer> divisors_of(Integer n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Integer, int>> factors;
    Integer p = 2;
    Integer limit = 1000000;
    while (p <= limit && p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
        p += (p == 2 ? 1 : 2);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divs = {Integer(1)};
    for (auto& [q, e] : factors) {
        size_t base = divs.size();
        Integer power = 1;
        for (int i = 1; i <= e; ++i) {
            power *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
        }
    }
    return divs;
}

// Rational roots with multiplicities; the deflated remainder is returned too.
std::pair<std::map<Rational, int>, Polynomial> rational_roots(const Polynomial& p) {
    std::map<Rational, int> roots;
    Polynomial rem = p;
    // Strip roots at zero first.
    while (!rem.is_zero() && rem.coeff(0) == 0 && rem.degree() > 0) {
        rem = *rem.divexact(Polynomial::monomial(1));
        roots[Rational(0)] += 1;
    }
    if (rem.degree() < 1) return {roots, rem};

    Integer denlcm = 1;
    for (auto& c : rem.coeffs()) denlcm = lcm(denlcm, c.get_den());
    std::vector<Integer> ic;
    for (auto& c : rem.coeffs()) {
        Rational s = c * denlcm;
        s.canonicalize();
        ic.push_back(s.get_num());
    }
    std::vector<Integer> ps = divisors_of(ic.front());
    std::vector<Integer> qs = divisors_of(ic.back());
    std::vector<Rational> candidates;
    for (auto& pp : ps)
        for (auto& qq : qs) {
            Rational c(pp, qq);
            c.canonicalize();
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto& c : candidates) {
        while (rem.degree() > 0 && rem.eval(c) == 0) {
            rem = *rem.divexact(Polynomial({-c, Rational(1)}));
            roots[c] += 1;
        }
    }
    return {roots, rem};
}

bool is_cycle_graph(const Graph& g) {
    for (int v = 1; v <= g.num_vertices(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

Eigenvalue Eigenvalue::unit_quad(Rational lambda_p, Rational b, long d) {
    Eigenvalue e;
    e.kind = Kind::UnitQuad;
    e.re = std::move(lambda_p);
    e.im_b = std::move(b);
    e.im_d = e.im_b == 0 ? 0 : d;
    if (d == 1) {
        // sqrt(1) folds into the coefficient; keep d=1 so im stays "b".
        e.im_d = e.im_b == 0 ? 0 : 1;
    }
    return e;
}

Eigenvalue Eigenvalue::root_of_unity(int k, int n) {
    k = ((k % n) + n) % n;
    int g = std::gcd(k == 0 ? n : k, n);
    k /= g;
    n /= g;
    if (n == 1) return real_unit(1);
    if (n == 2) return real_unit(-1);
    if (n == 4 && k == 1) return unit_quad(0, 1, 1);
    if (n == 4 && k == 3) return unit_quad(0, -1, 1);
    Eigenvalue e;
    e.kind = Kind::RootOfUnity;
    e.rou_k = k;
    e.rou_n = n;
    return e;
}

Eigenvalue Eigenvalue::real_unit(int pm1) { return unit_quad(Rational(pm1), 0, 0); }

bool Eigenvalue::operator<(const Eigenvalue& rhs) const {
    auto key = [](const Eigenvalue& e) {
        return std::tuple<int, Rational, Rational, long, int, int>(
            static_cast<int>(e.kind), e.re, e.im_b, e.im_d, e.rou_k, e.rou_n);
    };
    return key(*this) < key(rhs);
}

Eigenvalue Eigenvalue::conjugate() const {
    if (kind == Kind::RootOfUnity) return root_of_unity(rou_n - rou_k, rou_n);
    return unit_quad(re, -im_b, im_d);
}

bool Eigenvalue::is_real_one() const {
    return kind == Kind::UnitQuad && re == 1 && im_b == 0;
}

bool Eigenvalue::is_real_minus_one() const {
    return kind == Kind::UnitQuad && re == -1 && im_b == 0;
}

std::string Eigenvalue::to_string() const {
    if (kind == Kind::RootOfUnity) {
        std::ostringstream out;
        out << "e^(2*pi*i*" << rou_k << "/" << rou_n << ")";
        return out.str();
    }
    if (im_b == 0) return re.get_str();
    std::ostringstream out;
    if (re != 0) out << re.get_str() << (im_b > 0 ? " + " : " - ");
    else if (im_b < 0) out << "-";
    Rational ab = abs(im_b);
    if (ab != 1 || im_d == 1) out << ab.get_str() << "*";
    if (im_d != 1) out << "sqrt(" << im_d << ")*";
    out << "i";
    return out.str();
}

int SpectrumMultiset::total_multiplicity() const {
    int t = 0;
    for (auto& e : entries) t += e.multiplicity;
    return t;
}

int SpectrumMultiset::multiplicity_of(const Eigenvalue& v) const {
    int t = 0;
    for (auto& e : entries)
        if (e.value == v) t += e.multiplicity;
    return t;
}

Rational SpectrumMultiset::eigenvalue_product() const {
    Rational prod(1);
    Rational angle(0);  // turns, for root-of-unity entries
    for (auto& e : entries) {
        if (e.value.kind == Eigenvalue::Kind::RootOfUnity) {
            angle += Rational(e.value.rou_k, e.value.rou_n) * e.multiplicity;
            continue;
        }
        if (e.value.im_b == 0) {
            Rational base = e.value.re;
            for (int i = 0; i < e.multiplicity; ++i) prod *= base;
        } else if (e.value.im_b > 0) {
            // Pair with the conjugate; modulus^2 = re^2 + im_b^2 * d.
            Eigenvalue conj = e.value.conjugate();
            int cm = multiplicity_of(conj) - (e.value == conj ? e.multiplicity : 0);
            if (cm != e.multiplicity)
                throw ValidationError("spectrum not closed under conjugation");
            Rational mod2 = e.value.re * e.value.re + e.value.im_b * e.value.im_b * e.value.im_d;
            for (int i = 0; i < e.multiplicity; ++i) prod *= mod2;
        }
    }
    // Reduce the root-of-unity angle mod 1; the product must be real.
    angle -= Rational(mpz_class(angle.get_num() / angle.get_den()));
    if (angle < 0) angle += 1;
    angle.canonicalize();
    if (angle == Rational(1, 2)) prod = -prod;
    else if (angle != 0) throw ValidationError("non-real eigenvalue product");
    prod.canonicalize();
    return prod;
}

SpectrumMultiset grover_spectrum(const Graph& g) {
    int n = g.num_vertices();
    int m = g.num_edges();
    std::map<std::pair<int, Eigenvalue>, int> acc;  // (part, value) -> mult
    auto add = [&](SpectrumPart part, const Eigenvalue& v, int mult) {
        acc[{static_cast<int>(part), v}] += mult;
    };

    if (is_cycle_graph(g)) {
        // Spec(P) = {cos(2 pi k/n)}; the walk spectrum is every n-th root of
        // unity twice. m = n, so there is no RW-complement part.
        for (int k = 0; k < n; ++k) add(SpectrumPart::RW, Eigenvalue::root_of_unity(k, n), 2);
    } else {
        Polynomial cp = char_poly(transition_matrix(g));
        auto [roots, rem] = rational_roots(cp);
        if (rem.degree() > 0) throw UnsupportedSpectrum(cp);
        for (auto& [lambda_p, mult] : roots) {
            if (lambda_p == 1 || lambda_p == -1) {
                add(SpectrumPart::RW, Eigenvalue::real_unit(lambda_p == 1 ? 1 : -1), 2 * mult);
                continue;
            }
            // im = sqrt(1 - lambda^2) = sqrt(q^2 - p^2)/q for lambda = p/q.
            Integer p = lambda_p.get_num(), q = lambda_p.get_den();
            Integer radicand = q * q - p * p;
            if (radicand < 0 || !radicand.fits_slong_p())
                throw UnsupportedSpectrum(cp);
            auto [s, d] = squarefree_decompose(radicand.get_si());
            Rational b(Integer(s), q);
            b.canonicalize();
            add(SpectrumPart::RW, Eigenvalue::unit_quad(lambda_p, b, d), mult);
            add(SpectrumPart::RW, Eigenvalue::unit_quad(lambda_p, -b, d), mult);
        }
        int diff = m - n;
        if (diff > 0) {
            add(SpectrumPart::RWComplement, Eigenvalue::real_unit(1), diff);
            add(SpectrumPart::RWComplement, Eigenvalue::real_unit(-1), diff);
        } else if (diff < 0) {
            // Corollary case (iii): multiset subtraction of |m-n| copies of +-1.
            for (int pm : {1, -1}) {
                auto it = acc.find({static_cast<int>(SpectrumPart::RW), Eigenvalue::real_unit(pm)});
                if (it == acc.end() || it->second < -diff)
                    throw ValidationError("RW spectrum lacks the +-1 copies to subtract");
                it->second += diff;
                if (it->second == 0) acc.erase(it);
            }
        }
    }

    SpectrumMultiset spec;
    for (auto& [key, mult] : acc)
        spec.entries.push_back({key.second, mult, static_cast<SpectrumPart>(key.first)});
    return spec;
}

AutomorphicWeight automorphic_weight(const RationalFunction& f) {
    if (f.is_zero()) throw NotAutomorphic("zero function");
    RationalFunction g = f.at_reciprocal_arg();
    // g/f must equal C u^{-D}: cross-multiplied, p = g.num*f.den must be a
    // monomial shift of q = f.num*g.den.
    Polynomial p = g.num() * f.den();
    Polynomial q = f.num() * g.den();
    int k = p.degree() - q.degree();
    bool match = k >= 0 ? (p == q * Polynomial::monomial(k))
                        : (q == p * Polynomial::monomial(-k));
    if (!match) throw NotAutomorphic("f(1/u)/f(u) is not a monomial");
    Rational c = g.constant() / f.constant();
    c.canonicalize();
    if (c != 1 && c != -1) throw NotAutomorphic("f(1/u)/f(u) has non-unit constant");
    AutomorphicWeight w;
    w.C = c == 1 ? 1 : -1;
    w.D = -k;
    return w;
}

}  // namespace gwz
