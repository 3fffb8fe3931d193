#include "gwz/multi_zeta.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gwz/errors.hpp"
#include "gwz/poly.hpp"

namespace gwz {

namespace {

void check_omega(const std::vector<long>& omega) {
    for (long w : omega)
        if (w <= 0) throw ValidationError("omega entries must be positive");
}

long lcm_of(const std::vector<long>& omega) {
    long l = 1;
    for (long w : omega) l = std::lcm(l, w);
    return l;
}

const QuasiPolynomial& cached_counts(const std::vector<long>& omega) {
    static std::map<std::vector<long>, QuasiPolynomial> cache;
    std::vector<long> key = omega;
    std::sort(key.begin(), key.end());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, representation_counts(key)).first;
    return it->second;
}

std::vector<std::vector<double>> binomials(int n) {
    std::vector<std::vector<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, 1.0);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

struct ZetaPair {
    Complex value{0.0};
    Complex dvalue{0.0};
};

// zeta_r(w, x, omega) and optionally its w-derivative, for Re x > 0, via
//   zeta_r = L^{-w} sum_rho sum_i coef_{rho,i} zetaH(w - i, (x + rho)/L)
// where coef re-expands the residue polynomial in powers of (k + a_rho).
ZetaPair eval_pair(Complex w, Complex x, const std::vector<long>& omega, bool want_d) {
    ZetaPair out;
    if (omega.empty()) {
        out.value = std::pow(x, -w);
        if (want_d) out.dvalue = -std::log(x) * out.value;
        return out;
    }
    const QuasiPolynomial& qp = cached_counts(omega);
    long big_l = qp.period;
    int deg = static_cast<int>(omega.size()) - 1;
    auto binom = binomials(deg);

    Complex inner = 0, dinner = 0;
    for (long rho = 0; rho < big_l; ++rho) {
        Complex a = (x + Complex(static_cast<double>(rho))) / Complex(static_cast<double>(big_l));
        const auto& e = qp.residue_coeffs[rho];
        // coef_i = sum_{j >= i} e_j C(j, i) (-a)^{j-i}
        for (int i = 0; i <= deg; ++i) {
            Complex coef = 0;
            Complex apow = 1;  // (-a)^{j-i}
            for (int j = i; j <= deg; ++j) {
                if (j < static_cast<int>(e.size()))
                    coef += e[j].get_d() * binom[j][i] * apow;
                apow *= -a;
            }
            if (coef == Complex(0.0)) continue;
            inner += coef * hurwitz_zeta(w - Complex(i), a);
            if (want_d) dinner += coef * hurwitz_zeta_ds(w - Complex(i), a);
        }
    }
    double log_l = std::log(static_cast<double>(big_l));
    Complex scale = std::exp(-w * log_l);
    out.value = scale * inner;
    if (want_d) out.dvalue = scale * (dinner - log_l * inner);
    return out;
}

}  // namespace

Integer QuasiPolynomial::eval(long y) const {
    long rho = y % period, k = y / period;
    Rational acc = 0, kpow = 1;
    for (const Rational& c : residue_coeffs[rho]) {
        acc += c * kpow;
        kpow *= k;
    }
    acc.canonicalize();
    if (acc.get_den() != 1) throw ValidationError("quasi-polynomial count is non-integral");
    return acc.get_num();
}

QuasiPolynomial representation_counts(const std::vector<long>& omega) {
    check_omega(omega);
    if (omega.empty()) throw ValidationError("representation_counts needs r >= 1");
    int r = static_cast<int>(omega.size());
    long big_l = lcm_of(omega);

    // Exact counts by dynamic programming over one weight at a time.
    long n = big_l * (r + 2);
    std::vector<Integer> counts(n, 0);
    counts[0] = 1;
    for (long w : omega)
        for (long y = w; y < n; ++y) counts[y] += counts[y - w];

    QuasiPolynomial qp;
    qp.period = big_l;
    qp.residue_coeffs.resize(big_l);
    for (long rho = 0; rho < big_l; ++rho) {
        // Lagrange fit on k = 0..r-1, degree <= r-1, exact rationals.
        Polynomial fit;
        for (int i = 0; i < r; ++i) {
            Polynomial basis = Polynomial::constant(Rational(counts[rho + i * big_l]));
            for (int j = 0; j < r; ++j) {
                if (j == i) continue;
                // Note: mpq_class(n, d) needs d > 0; fold the sign into n.
                Rational scale(i > j ? 1 : -1, std::abs(i - j));
                basis = basis * Polynomial({Rational(-j), Rational(1)}) * scale;
            }
            fit = fit + basis;
        }
        qp.residue_coeffs[rho] = fit.coeffs();
        // Held-out verification: the fit must reproduce two extra samples.
        for (int i = r; i < r + 2; ++i) {
            if (fit.eval(Rational(i)) != Rational(counts[rho + i * big_l]))
                throw ValidationError("representation count is not quasi-polynomial of expected degree");
        }
    }
    return qp;
}

Complex multiple_hurwitz_zeta(Complex w, Complex x, const std::vector<long>& omega) {
    check_omega(omega);
    if (x.real() <= 0) throw DomainError("multiple_hurwitz_zeta requires Re x > 0");
    return eval_pair(w, x, omega, false).value;
}

Complex multiple_hurwitz_zeta_dw(Complex w, Complex x, const std::vector<long>& omega) {
    check_omega(omega);
    if (x.real() <= 0) throw DomainError("multiple_hurwitz_zeta requires Re x > 0");
    return eval_pair(w, x, omega, true).dvalue;
}

Complex log_multiple_gamma(Complex x, const std::vector<long>& omega) {
    check_omega(omega);
    if (x.real() > 0) return eval_pair(Complex(0.0), x, omega, true).dvalue;
    if (omega.empty()) {
        if (x == Complex(0.0)) throw PoleError("multiple gamma pole on the omega lattice");
        return -std::log(x);
    }
    // Ladder continuation: Gamma_r(x) = Gamma_r(x + omega_1) Gamma_{r-1}(x, omega').
    std::vector<long> rest(omega.begin() + 1, omega.end());
    return log_multiple_gamma(x + Complex(static_cast<double>(omega.front())), omega) +
           log_multiple_gamma(x, rest);
}

Complex log_multiple_sine(Complex x, const std::vector<long>& omega) {
    check_omega(omega);
    double total = 0;
    for (long w : omega) total += static_cast<double>(w);
    int r = static_cast<int>(omega.size());
    Complex lhs = -log_multiple_gamma(x, omega);
    Complex rhs = log_multiple_gamma(Complex(total) - x, omega);
    return r % 2 == 0 ? lhs + rhs : lhs - rhs;
}

}  // namespace gwz
