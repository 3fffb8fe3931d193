#include "gwz/absolute.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gwz {

namespace {

// Phi_d, computed as (u^d - 1) / prod_{k | d, k < d} Phi_k.
const Polynomial& cyclotomic(int d) {
    static std::vector<Polynomial> memo{Polynomial()};  // index 0 unused
    for (int i = static_cast<int>(memo.size()); i <= d; ++i) {
        Polynomial p = Polynomial::unit_factor(i);
        for (int k = 1; k < i; ++k) {
            if (i % k != 0) continue;
            p = *p.divexact(memo[k]);
        }
        memo.push_back(std::move(p));
    }
    return memo[d];
}

}  // namespace

Rational CyclotomicForm::degree() const {
    Rational d(half_exponent, 2);
    for (long mi : m_list) d += mi;
    for (long nj : n_list) d -= nj;
    d.canonicalize();
    return d;
}

int CyclotomicForm::automorphy_sign() const {
    return (m_list.size() + n_list.size()) % 2 == 0 ? 1 : -1;
}

RationalFunction CyclotomicForm::reconstruct() const {
    if (half_exponent % 2 != 0)
        throw ValidationError("odd half_exponent has no single-valued rational-function form");
    RationalFunction f = RationalFunction::from_poly(
        Polynomial::monomial(std::abs(half_exponent) / 2));
    if (half_exponent < 0) f = f.reciprocal();
    f = f * RationalFunction::from_poly(Polynomial::constant(sign));
    for (long mi : m_list)
        f = f * RationalFunction::from_poly(Polynomial::unit_factor(static_cast<int>(mi)));
    for (long nj : n_list)
        f = f * RationalFunction::from_poly(Polynomial::unit_factor(static_cast<int>(nj))).reciprocal();
    return f;
}

CyclotomicForm to_cyclotomic_form(const RationalFunction& f, int kmax) {
    if (f.is_zero()) throw ValidationError("zero function has no cyclotomic form");
    if (f.constant() != 1 && f.constant() != -1) throw NotRepresentable(f);
    Polynomial num = f.num(), den = f.den();
    if (kmax < 1) kmax = std::max({num.degree(), den.degree(), 1});

    // Exponent of Phi_d in f.
    std::vector<int> a(kmax + 1, 0);
    for (int d = 1; d <= kmax; ++d) {
        const Polynomial& phi = cyclotomic(d);
        while (true) {
            auto q = num.divexact(phi);
            if (!q) break;
            num = std::move(*q);
            a[d] += 1;
        }
        while (true) {
            auto q = den.divexact(phi);
            if (!q) break;
            den = std::move(*q);
            a[d] -= 1;
        }
    }
    // What remains must be a monomial over a constant.
    bool monomial = num == Polynomial::monomial(num.degree());
    if (!monomial || den.degree() != 0)
        throw NotRepresentable(RationalFunction(1, num, den));

    // Solve prod_d Phi_d^{a_d} = prod_k (x^k - 1)^{e_k}: since x^k - 1 =
    // prod_{d | k} Phi_d, the system a_d = sum_{k : d | k} e_k is triangular
    // from the top and always solvable over the integers.
    std::vector<int> e(kmax + 1, 0);
    for (int k = kmax; k >= 1; --k) {
        e[k] = a[k];
        for (int j = 2 * k; j <= kmax; j += k) e[k] -= e[j];
    }

    CyclotomicForm cf;
    cf.sign = f.constant() == 1 ? 1 : -1;
    cf.half_exponent = 2 * num.degree();
    for (int k = 1; k <= kmax; ++k) {
        for (int i = 0; i < e[k]; ++i) cf.m_list.push_back(k);
        for (int i = 0; i < -e[k]; ++i) cf.n_list.push_back(k);
    }
    return cf;
}

AbsoluteZetaExpression kurokawa_decompose(const CyclotomicForm& cf) {
    int a = static_cast<int>(cf.m_list.size());
    if (a > 16) throw ScaleError("too many numerator factors for subset expansion");
    AbsoluteZetaExpression expr;
    expr.order = static_cast<int>(cf.n_list.size());
    expr.omega = cf.n_list;
    expr.sign = cf.sign;
    expr.C = cf.automorphy_sign();
    expr.D = cf.degree();
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
        AbsoluteZetaTerm term;
        long m_of_i = 0;
        for (int i = 0; i < a; ++i)
            if (mask & (1u << i)) m_of_i += cf.m_list[i];
        term.shift = Rational(m_of_i) - expr.D;
        term.shift.canonicalize();
        term.exponent = cf.sign * (std::popcount(mask) % 2 == 0 ? 1 : -1);
        expr.terms.push_back(term);
    }
    return expr;
}

Complex absolute_hurwitz_Z(const AbsoluteZetaExpression& expr, Complex w, Complex s) {
    Complex z = 0;
    for (const auto& t : expr.terms)
        z += static_cast<double>(t.exponent) *
             multiple_hurwitz_zeta(w, s + Complex(t.shift.get_d()), expr.omega);
    return z;
}

Complex log_absolute_zeta(const AbsoluteZetaExpression& expr, Complex s) {
    Complex z = 0;
    for (const auto& t : expr.terms)
        z += static_cast<double>(t.exponent) *
             log_multiple_gamma(s + Complex(t.shift.get_d()), expr.omega);
    return z;
}

FunctionalEquationReport functional_equation_check(const AbsoluteZetaExpression& expr, Complex s) {
    FunctionalEquationReport report;
    Complex d(expr.D.get_d());
    report.lhs_log = static_cast<double>(expr.C) * log_absolute_zeta(expr, d - s);
    Complex eps_log = 0;
    for (const auto& t : expr.terms)
        eps_log += static_cast<double>(t.exponent) *
                   log_multiple_sine(s + Complex(t.shift.get_d()), expr.omega);
    report.rhs_log = eps_log + log_absolute_zeta(expr, s);
    report.residual = std::abs(std::exp(report.lhs_log - report.rhs_log) - 1.0);
    return report;
}

// --- Mellin route ------------------------------------------------------------

namespace {

// Exact Taylor coefficients of p(e^t) around t = 0, length `count`:
// coefficient of t^j is sum_k p_k k^j / j!.
std::vector<Rational> exp_series(const Polynomial& p, int count) {
    std::vector<Rational> out(count, Rational(0));
    Rational jfact = 1;
    std::vector<Rational> kpow(p.degree() + 1, Rational(1));  // k^j
    for (int j = 0; j < count; ++j) {
        if (j > 0) jfact *= j;
        Rational acc = 0;
        for (int k = 0; k <= p.degree(); ++k) {
            acc += p.coeff(k) * kpow[k];
            kpow[k] *= k;
        }
        out[j] = acc / jfact;
        out[j].canonicalize();
    }
    return out;
}

int valuation(const std::vector<Rational>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return static_cast<int>(v.size());
}

struct Quad {
    Complex s;
    Complex w;
    Complex growth;  // deg f - s, the exponential rate at infinity
    const RationalFunction* f;
    Polynomial num_rev, den_rev;
    double tol;

    Complex integrand(double t) const {
        double z = std::exp(-t);
        Complex head = f->constant().get_d() * num_rev.eval_double(z) / den_rev.eval_double(z);
        return head * std::exp(growth * t) * std::pow(Complex(t), w - 1.0);
    }

    Complex simpson(double lo, double hi, Complex flo, Complex fmid, Complex fhi) const {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    }

    Complex adaptive(double lo, double hi, Complex flo, Complex fmid, Complex fhi,
                     Complex whole, double eps, int depth) const {
        double mid = (lo + hi) / 2;
        Complex fl = integrand((lo + mid) / 2), fr = integrand((mid + hi) / 2);
        Complex left = simpson(lo, mid, flo, fl, fmid);
        Complex right = simpson(mid, hi, fmid, fr, fhi);
        if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
            return left + right + (left + right - whole) / 15.0;
        return adaptive(lo, mid, flo, fl, fmid, left, eps / 2, depth - 1) +
               adaptive(mid, hi, fmid, fr, fhi, right, eps / 2, depth - 1);
    }

    Complex integrate(double lo, double hi) const {
        Complex flo = integrand(lo), fhi = integrand(hi);
        Complex fmid = integrand((lo + hi) / 2);
        Complex whole = simpson(lo, hi, flo, fmid, fhi);
        return adaptive(lo, hi, flo, fmid, fhi, whole, tol, 40);
    }
};

}  // namespace

MellinResult mellin_Z(const RationalFunction& f, Complex w, Complex s) {
    if (f.is_zero()) return {Complex(0.0), 0.0};
    double deg = f.degree();
    double rate = s.real() - deg;
    if (rate <= 0)
        throw ConvergenceError("mellin_Z requires Re(s) > deg(f) for decay at infinity");

    // Laurent series of f(e^t) at t = 0: valuation mu = -(order of the pole),
    // i.e. minus the multiplicity of the root u = 1 in the denominator.
    int nterms = 140;
    std::vector<Rational> ns = exp_series(f.num(), nterms + f.den().degree() + 2);
    std::vector<Rational> ds = exp_series(f.den(), nterms + f.den().degree() + 2);
    int vn = valuation(ns), vd = valuation(ds);
    int mu = vn - vd;  // f(e^t) = t^mu * regular series
    std::vector<Rational> a(ns.begin() + vn, ns.end());
    std::vector<Rational> b(ds.begin() + vd, ds.end());
    std::vector<Rational> inv = series_inverse(Polynomial(b), nterms);
    std::vector<Rational> g = series_mul(a, inv, nterms);  // f(e^t) / t^mu

    // delta below the nearest non-zero singularity of f(e^t) (at |t| >= 2pi/K).
    int kk = std::max(2, std::max(f.num().degree(), f.den().degree()));
    double delta = std::min(0.5, 0.35 * 2 * 3.14159265358979 / kk);

    // int_0^delta: fold in e^{-st} and integrate termwise; each power
    // integrates to delta^{w+mu+k}/(w+mu+k), which continues the integral
    // analytically in w.
    // exp(-s t) coefficients.
    std::vector<Complex> es(nterms);
    es[0] = 1;
    for (int j = 1; j < nterms; ++j) es[j] = es[j - 1] * (-s) / static_cast<double>(j);
    Complex series_sum = 0;
    double last = 0, series_err = 0;
    for (int k = 0; k < nterms; ++k) {
        Complex ck = 0;
        for (int j = 0; j <= k; ++j) ck += f.constant().get_d() * g[j].get_d() * es[k - j];
        Complex p = w + Complex(static_cast<double>(mu + k));
        if (std::abs(p) < 1e-12)
            throw PoleError("mellin_Z pole in w at this Laurent order");
        Complex term = ck * std::pow(Complex(delta), p) / p;
        series_sum += term;
        last = std::abs(term);
    }
    series_err = last * 3;

    // Quadrature on [delta, T] with T chosen so the integrand is below 1e-16.
    Quad q;
    q.s = s;
    q.w = w;
    q.growth = Complex(deg) - s;
    q.f = &f;
    q.num_rev = f.num().reversed(f.num().degree());
    q.den_rev = f.den().reversed(f.den().degree());
    q.tol = 1e-11;
    double t_end = std::max(delta + 1.0, 40.0 / rate);
    for (int i = 0; i < 4; ++i) {
        double mag = -rate * t_end + (w.real() - 1) * std::log(t_end);
        if (mag > -37) t_end *= 1.6;
    }
    Complex mid_sum = 0;
    // Split to keep the adaptive rule honest over long ranges.
    double lo = delta;
    while (lo < t_end) {
        double hi = std::min(t_end, lo * 4 + 1);
        mid_sum += q.integrate(lo, hi);
        lo = hi;
    }
    double tail = std::abs(q.integrand(t_end)) / rate;

    Complex inv_gamma = std::exp(-complex_log_gamma(w));
    MellinResult out;
    out.value = (series_sum + mid_sum) * inv_gamma;
    out.abs_err = (series_err + tail + q.tol * 4) * std::abs(inv_gamma) + 1e-13;
    return out;
}

}  // namespace gwz
