#include "gwz/complete_graph.hpp"

#include <cmath>
#include <limits>

#include "gwz/errors.hpp"
#include "gwz/poly.hpp"

namespace gwz {

CompleteGraphParams complete_graph_params(long n) {
    if (n < 4) throw ValidationError("complete_graph_params requires n >= 4");
    CompleteGraphParams p;
    p.n = n;
    p.L = n * (n - 3) / 2;
    p.M = (n * n - n + 2) / 2;
    p.alpha_re = Rational(-1, n - 1);
    p.alpha_im_sq = Rational(n * (n - 2), (n - 1) * (n - 1));
    p.alpha_re.canonicalize();
    p.alpha_im_sq.canonicalize();
    return p;
}

double PSeries::bound() const {
    return static_cast<double>(n - 1) / std::sqrt(static_cast<double>(n * (n - 2)));
}

PSeries p_coefficients(long n, int lmax) {
    if (n < 4) throw ValidationError("p_coefficients requires n >= 4");
    if (lmax < 0) throw ValidationError("lmax must be non-negative");
    Rational q(2, n - 1);
    q.canonicalize();

    // Recurrence: P_l = -(2/(n-1)) P_{l-1} - P_{l-2}.
    std::vector<Rational> rec(lmax + 1);
    rec[0] = 1;
    if (lmax >= 1) rec[1] = -q;
    for (int l = 2; l <= lmax; ++l) {
        rec[l] = -q * rec[l - 1] - rec[l - 2];
        rec[l].canonicalize();
    }

    // Closed sum: P_l = sum_i (-1)^{l-i} C(l-i, i) (2/(n-1))^{l-2i}.
    std::vector<Rational> qpow(lmax + 1);
    qpow[0] = 1;
    for (int i = 1; i <= lmax; ++i) qpow[i] = qpow[i - 1] * q;
    for (int l = 0; l <= lmax; ++l) {
        Rational sum = 0;
        for (int i = 0; 2 * i <= l; ++i) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), l - i, i);
            Rational term = Rational(binom) * qpow[l - 2 * i];
            sum += ((l - i) % 2 == 0) ? term : -term;
        }
        sum.canonicalize();
        if (sum != rec[l]) throw ValidationError("P_l closed sum and recurrence disagree");
    }

    PSeries out;
    out.n = n;
    out.coeffs = std::move(rec);
    return out;
}

std::vector<Rational> collapsed_coefficients(long n, int count) {
    if (n < 4) throw ValidationError("collapsed_coefficients requires n >= 4");
    CompleteGraphParams p = complete_graph_params(n);
    Rational q(2, n - 1);
    q.canonicalize();
    Polynomial one_minus_v({Rational(1), Rational(-1)});
    Polynomial one_minus_v2({Rational(1), Rational(0), Rational(-1)});
    Polynomial quad({Rational(1), q, Rational(1)});
    Polynomial base = one_minus_v.pow(2) * one_minus_v2.pow(static_cast<int>(p.L)) *
                      quad.pow(static_cast<int>(n - 1));
    return series_inverse(base, count);
}

TruncatedZ truncated_Z_Kn(long n, Complex w, Complex s, int trunc, bool allow_divergent) {
    if (n < 3) throw ValidationError("truncated_Z_Kn requires n >= 3");
    if (trunc < 1) throw ValidationError("truncation must be positive");
    if (n == 3) {
        // K_3 = C_3: Z(w, s) = zeta_2(w, s + 6, (3, 3)) exactly.
        TruncatedZ out;
        out.value = multiple_hurwitz_zeta(w, s + Complex(6.0), {3, 3});
        out.tail_estimate = 1e-12;
        return out;
    }
    CompleteGraphParams p = complete_graph_params(n);
    double excess = w.real() - static_cast<double>(p.L + 2);
    if (excess <= 0 && !allow_divergent)
        throw ConvergenceError(
            "truncated_Z_Kn diverges: the collapsed coefficients grow like t^{L+1}, "
            "so the series needs Re(w) > L + 2");

    std::vector<Rational> c = collapsed_coefficients(n, trunc + 1);
    Complex sum = 0;
    for (int t = 0; t <= trunc; ++t)
        sum += c[t].get_d() * std::pow(Complex(static_cast<double>(t + 2 * p.M - 2)) + s, -w);
    if (p.L % 2 != 0) sum = -sum;

    TruncatedZ out;
    out.value = sum;
    if (excess > 0) {
        // |c_t| ~ C t^{L+1}; estimate C from the last computed coefficients.
        double growth = 0;
        for (int t = std::max(1, trunc - 10); t <= trunc; ++t)
            growth = std::max(growth, std::abs(c[t].get_d()) /
                                          std::pow(static_cast<double>(t), p.L + 1.0));
        // integral bound: C int_K^inf t^{L+1-Re w} dt = C K^{L+2-Re w} / excess
        out.tail_estimate =
            growth * std::pow(static_cast<double>(trunc), p.L + 2.0 - w.real()) / excess;
    } else {
        out.tail_estimate = std::numeric_limits<double>::infinity();
    }
    return out;
}

FormalProductKn formal_product_Kn(long n) {
    CompleteGraphParams p = complete_graph_params(n);
    FormalProductKn out;
    out.n = n;
    out.L = p.L;
    out.M = p.M;
    out.doubled_indices = p.L;
    out.weighted_indices = n - 1;
    out.exponent_rule = "(-1)^L * prod_{N=L+3..M} P_{k_N}";
    return out;
}

}  // namespace gwz
