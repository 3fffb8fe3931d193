#pragma once

#include <vector>

#include "gwz/errors.hpp"
#include "gwz/multi_zeta.hpp"
#include "gwz/poly.hpp"

namespace gwz {

// f(x) = sign * x^{half_exponent/2} * prod_i (x^{m_i} - 1) / prod_j (x^{n_j} - 1)
struct CyclotomicForm {
    int sign = 1;  // the leading constant, restricted to {-1, +1}
    int half_exponent = 0;  // ell: the power of x is ell/2
    std::vector<long> m_list;  // numerator exponents, ascending
    std::vector<long> n_list;  // denominator exponents, ascending

    // deg(f) = ell/2 + sum m - sum n
    Rational degree() const;
    // Exact automorphy data: f(1/x) = C x^{-D} f(x) with C = (-1)^{a-b}.
    int automorphy_sign() const;
    RationalFunction reconstruct() const;
};

struct NotRepresentable : std::runtime_error {
    RationalFunction residual;
    explicit NotRepresentable(RationalFunction r)
        : std::runtime_error("rational function is not a product of unit factors"),
          residual(std::move(r)) {}
};

// Factor f over the basis {x^k - 1}; throws NotRepresentable (carrying the
// non-cyclotomic residual) when that fails, e.g. for complete graphs K_n.
CyclotomicForm to_cyclotomic_form(const RationalFunction& f, int kmax = 0);

// One term of the structure theorem: Gamma_b(s + shift, omega)^exponent,
// equivalently a zeta_b(w, s + shift, omega) summand with coefficient
// `exponent` in Z_f.
struct AbsoluteZetaTerm {
    Rational shift;  // m(I) - deg(f)
    int exponent = 1;  // sign * (-1)^{|I|}
};

struct AbsoluteZetaExpression {
    int order = 0;  // b
    std::vector<long> omega;  // the n vector
    std::vector<AbsoluteZetaTerm> terms;  // one per subset I, 2^a of them
    int sign = 1;  // leading constant of f
    int C = 1;  // automorphy sign (-1)^{a-b}
    Rational D;  // weight = deg(f)
};

// Theorem: Z_f(w,s) = sign * sum_I (-1)^{|I|} zeta_b(w, s - deg f + m(I), n),
// zeta_f(s) = prod_I Gamma_b(s - deg f + m(I), n)^{sign * (-1)^{|I|}}.
AbsoluteZetaExpression kurokawa_decompose(const CyclotomicForm& cf);

// Z_f(w, s) from the decomposition (signed sum of multiple Hurwitz zetas).
Complex absolute_hurwitz_Z(const AbsoluteZetaExpression& expr, Complex w, Complex s);

// log zeta_f(s) = sum_I exponent * log Gamma_b(s + shift, omega), mod 2 pi i.
Complex log_absolute_zeta(const AbsoluteZetaExpression& expr, Complex s);

// Functional equation zeta_f(D - s)^C = eps(s) zeta_f(s) with
// eps(s) = prod_I S_b(s + shift, omega)^exponent. Returns the logs of both
// sides and the residual |LHS/RHS - 1|.
struct FunctionalEquationReport {
    Complex lhs_log;
    Complex rhs_log;
    double residual = 0;
};
FunctionalEquationReport functional_equation_check(const AbsoluteZetaExpression& expr, Complex s);

struct MellinResult {
    Complex value;
    double abs_err = 0;
};

// Z_f(w, s) straight from the integral (1/Gamma(w)) int_0^inf f(e^t) e^{-st}
// t^{w-1} dt: exact Laurent series of f(e^t) on (0, delta], adaptive
// quadrature on (delta, T], exponential tail bound. The series route
// continues the t -> 0 end analytically in w, so only decay at infinity is
// required: Re(s) > deg(f).
MellinResult mellin_Z(const RationalFunction& f, Complex w, Complex s);

}  // namespace gwz
