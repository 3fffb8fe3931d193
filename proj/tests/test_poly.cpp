#include <random>

#include "doctest.h"
#include "gwz/graph.hpp"
#include "gwz/matrix.hpp"
#include "gwz/poly.hpp"

using namespace gwz;

TEST_CASE("polynomial arithmetic basics") {
    Polynomial p({Rational(1), Rational(0), Rational(-1)});  // 1 - u^2
    Polynomial q = Polynomial::unit_factor(2);               // u^2 - 1
    CHECK(p == -q);
    CHECK(p * q == -(q * q));
    CHECK(p.eval(Rational(3)) == Rational(-8));
    CHECK(p.derivative() == Polynomial({Rational(0), Rational(-2)}));
    CHECK(Polynomial::monomial(3, Rational(2)).degree() == 3);
    CHECK(q.pow(3).degree() == 6);
    CHECK(q.reversed(2) == Polynomial({Rational(-1), Rational(0), Rational(1)}) * Rational(-1));
}

TEST_CASE("division and gcd") {
    Polynomial a = Polynomial::unit_factor(6);  // u^6 - 1
    Polynomial b = Polynomial::unit_factor(4);  // u^4 - 1
    auto [quot, rem] = a.divmod(b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
    // gcd(u^6-1, u^4-1) = u^gcd(6,4) - 1 = u^2 - 1 up to a constant.
    CHECK(gcd(a, b).monic() == Polynomial::unit_factor(2));
    CHECK(a.divexact(Polynomial::unit_factor(2)).has_value());
    CHECK_FALSE(a.divexact(Polynomial::unit_factor(4)).has_value());
}

TEST_CASE("series helpers invert and log consistently") {
    Polynomial p({Rational(1), Rational(2, 3), Rational(-1, 5)});
    auto inv = series_inverse(p, 12);
    auto prod = series_mul(p.coeffs(), inv, 12);
    CHECK(prod[0] == 1);
    for (int i = 1; i < 12; ++i) CHECK(prod[i] == 0);

    // log(1/(1-u)) = sum u^k / k.
    auto geom = series_inverse(Polynomial({Rational(1), Rational(-1)}), 10);
    auto lg = series_log(geom, 10);
    for (int k = 1; k < 10; ++k) CHECK(lg[k] == Rational(1, k));
}

TEST_CASE("characteristic polynomial routes agree on random matrices") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 2 + trial;
        RationalMatrix m(n, n);
        std::vector<std::vector<Polynomial>> lam_minus_m(n, std::vector<Polynomial>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = Rational(num(rng), den(rng));
                m.at(i, j).canonicalize();
                Polynomial entry = Polynomial::constant(-m.at(i, j));
                if (i == j) entry = entry + Polynomial::monomial(1);
                lam_minus_m[i][j] = entry;
            }
        CHECK(char_poly(m) == poly_matrix_det(lam_minus_m));
    }
}

TEST_CASE("det(I - uM) is the reversed characteristic polynomial") {
    Graph g = generate_family(GraphFamily::complete(4));
    RationalMatrix p = transition_matrix(g);
    Polynomial d = det_one_minus_u_M(p);
    CHECK(d.coeff(0) == 1);
    // det(I - uP) at u = 1 vanishes: P is stochastic, so 1 is an eigenvalue.
    CHECK(d.eval(Rational(1)) == 0);
    int n = p.rows();
    Polynomial cp = char_poly(p);
    // u^n cp(1/u) = u^n prod (1/u - lambda) = prod (1 - lambda u) = det(I - uP)
    CHECK(cp.reversed(n) == d);
}

TEST_CASE("rational function canonical form and operations") {
    Polynomial u2 = Polynomial::unit_factor(2);
    Polynomial u4 = Polynomial::unit_factor(4);
    // (u^4-1)/(u^2-1) reduces to u^2+1.
    RationalFunction f = rf_normalize(u4, u2);
    CHECK(f.den() == Polynomial({Rational(1)}));
    CHECK(f.num() == Polynomial({Rational(1), Rational(0), Rational(1)}));
    CHECK(f.constant() == 1);

    RationalFunction g = rf_normalize(u2 * Rational(3), u4 * Rational(6));
    CHECK(g.constant() == Rational(1, 2));
    CHECK(g * g.reciprocal() == RationalFunction::one());
    CHECK(g.pow(3) == g * g * g);
    CHECK(g.degree() == -2);

    // f(1/u) round trip.
    CHECK(g.at_reciprocal_arg().at_reciprocal_arg() == g);

    // Taylor coefficients of 1/(1 - u^2) are 1, 0, 1, 0, ...
    auto s = rf_normalize(Polynomial({Rational(1)}),
                          Polynomial({Rational(1), Rational(0), Rational(-1)}))
                 .series(8);
    for (int k = 0; k < 8; ++k) CHECK(s[k] == (k % 2 == 0 ? 1 : 0));
}

TEST_CASE("unit-basis factoring reconstructs random products") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> kdist(1, 6), edist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RationalFunction f(Rational(trial % 2 == 0 ? 1 : -1), Polynomial({Rational(1)}),
                           Polynomial({Rational(1)}));
        for (int i = 0; i < 3; ++i) {
            int e = edist(rng);
            RationalFunction factor = RationalFunction::from_poly(Polynomial::unit_factor(kdist(rng)));
            if (e < 0) {
                factor = factor.reciprocal();
                e = -e;
            }
            f = f * factor.pow(e);
        }
        UnitFactoredForm form = factor_unit_basis(f, 8);
        CHECK(form.reconstruct() == f);
    }
}
