#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwz/matrix.hpp"
#include "gwz/rational.hpp"

namespace gwz {

// Univariate polynomial over exact rationals, coefficients in ascending
// degree, canonical (no trailing zeros). The zero polynomial has empty
// coefficient storage and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(int degree, const Rational& c = 1);
    // u^k - 1, the unit-basis factor.
    static Polynomial unit_factor(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    Polynomial derivative() const;
    Polynomial pow(int e) const;
    // Coefficient reversal against an explicit degree bound: returns
    // u^n * p(1/u), n >= degree().
    Polynomial reversed(int n) const;
    Polynomial monic() const;

    // Euclidean division: returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    // Exact division or nullopt when the remainder is nonzero.
    std::optional<Polynomial> divexact(const Polynomial& divisor) const;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Truncated power-series helpers (inputs/outputs are coefficient vectors of
// length up to count).
std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int count);
// Reciprocal series of p, requires p(0) != 0.
std::vector<Rational> series_inverse(const Polynomial& p, int count);
// log of a series with constant term 1.
std::vector<Rational> series_log(const std::vector<Rational>& z, int count);

// Characteristic polynomial det(lambda*I - M) by the Faddeev-LeVerrier trace
// recursion on the denominator-cleared integer matrix.
Polynomial char_poly(const RationalMatrix& m);

// det(I - u*M) via char_poly coefficient reversal.
Polynomial det_one_minus_u_M(const RationalMatrix& m);

// Determinant of a matrix of polynomials by fraction-free (Bareiss)
// elimination over the polynomial ring; the dual route to char_poly.
Polynomial poly_matrix_det(std::vector<std::vector<Polynomial>> a);

// Exact rational function c * num/den with num, den monic and coprime.
class RationalFunction {
public:
    RationalFunction() : constant_(0), num_({1}), den_({1}) {}
    RationalFunction(Rational constant, Polynomial num, Polynomial den);

    static RationalFunction from_poly(const Polynomial& p) {
        return RationalFunction(1, p, Polynomial({Rational(1)}));
    }
    static RationalFunction one() { return from_poly(Polynomial({Rational(1)})); }

    const Rational& constant() const { return constant_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return constant_ == 0; }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction reciprocal() const;
    RationalFunction pow(int e) const;
    // f(1/u) as a rational function (coefficient reversal both sides).
    RationalFunction at_reciprocal_arg() const;

    // deg num - deg den (order of growth at infinity).
    int degree() const { return num_.degree() - den_.degree(); }
    // Taylor coefficients at u = 0; requires den(0) != 0.
    std::vector<Rational> series(int count) const;
    double eval_double(double x) const;

    std::string to_string(const std::string& var = "u") const;

private:
    Rational constant_;
    Polynomial num_, den_;
};

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

// f factored over the unit basis {u^k - 1}: constant * prod (u^k-1)^{e_k}
// * residual_num/residual_den, reconstructing f exactly.
struct UnitFactoredForm {
    Rational constant;
    std::map<int, int> factors;  // k -> exponent (may be negative)
    Polynomial residual_num;
    Polynomial residual_den;

    RationalFunction reconstruct() const;
    std::string to_string(const std::string& var = "u") const;
};

// Greedy exact extraction of (u^k - 1) factors for k = kmax down to 1.
UnitFactoredForm factor_unit_basis(const RationalFunction& f, int kmax);

}  // namespace gwz
