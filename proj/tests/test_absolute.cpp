#include <cmath>
#include <set>

#include "doctest.h"
#include "gwz/absolute.hpp"
#include "gwz/graph.hpp"
#include "gwz/graph_zeta.hpp"

using namespace gwz;

namespace {

RationalFunction family_zeta(const char* spec) {
    return grover_zeta(generate_family(parse_family_spec(spec)));
}

}  // namespace

TEST_CASE("cyclotomic forms of the closed-form families") {
    // Cycle: 1/(u^n-1)^2.
    CyclotomicForm cyc = to_cyclotomic_form(family_zeta("cycle:5"));
    CHECK(cyc.sign == 1);
    CHECK(cyc.half_exponent == 0);
    CHECK(cyc.m_list.empty());
    CHECK(cyc.n_list == std::vector<long>{5, 5});
    CHECK(cyc.degree() == -10);
    CHECK(cyc.reconstruct() == family_zeta("cycle:5"));

    // Star: -(u^2-1)^{n-3}/(u^4-1)^{n-2}.
    CyclotomicForm star = to_cyclotomic_form(family_zeta("star:5"));
    CHECK(star.sign == -1);
    CHECK(star.m_list == std::vector<long>{2, 2});
    CHECK(star.n_list == std::vector<long>{4, 4, 4});
    CHECK(star.degree() == -8);
    CHECK(star.automorphy_sign() == -1);
    CHECK(star.reconstruct() == family_zeta("star:5"));

    // K_{3,3}: -1/((u^2-1)(u^4-1)^4).
    CyclotomicForm k33 = to_cyclotomic_form(family_zeta("bipartite:3,3"));
    CHECK(k33.sign == -1);
    CHECK(k33.m_list.empty());
    CHECK(k33.n_list == std::vector<long>{2, 4, 4, 4, 4});
    CHECK(k33.degree() == -18);
    CHECK(k33.automorphy_sign() == -1);
    CHECK(k33.reconstruct() == family_zeta("bipartite:3,3"));

    // A positive half_exponent round trip: x^2 (x^3-1)/(x^2-1).
    RationalFunction f = RationalFunction::from_poly(Polynomial::monomial(2)) *
                         rf_normalize(Polynomial::unit_factor(3), Polynomial::unit_factor(2));
    CyclotomicForm mixed = to_cyclotomic_form(f);
    CHECK(mixed.half_exponent == 4);
    CHECK(mixed.degree() == 3);
    CHECK(mixed.reconstruct() == f);
}

TEST_CASE("complete graphs are not products of unit factors") {
    CHECK_THROWS_AS(to_cyclotomic_form(family_zeta("complete:4")), NotRepresentable);
    try {
        to_cyclotomic_form(family_zeta("complete:5"));
        FAIL("expected NotRepresentable");
    } catch (const NotRepresentable& e) {
        // The residual carries the non-cyclotomic part for diagnostics.
        CHECK_FALSE(e.residual.is_zero());
        CHECK(e.residual.den().degree() > 0);
    }
}

TEST_CASE("structure of the decomposition for cycles and stars") {
    // Cycle: a = 0, so a single positive term Z(w,s) = zeta_2(w, s+2n, (n,n)).
    AbsoluteZetaExpression cyc = kurokawa_decompose(to_cyclotomic_form(family_zeta("cycle:6")));
    CHECK(cyc.order == 2);
    CHECK(cyc.omega == std::vector<long>{6, 6});
    CHECK(cyc.terms.size() == 1);
    CHECK(cyc.terms[0].shift == 12);
    CHECK(cyc.terms[0].exponent == 1);
    CHECK(cyc.C == 1);
    CHECK(cyc.D == -12);

    // Star n = 5: a = 2, b = 3, 4 terms with shifts 8 + {0, 2, 2, 4} and the
    // leading -1 flipping every exponent.
    AbsoluteZetaExpression star = kurokawa_decompose(to_cyclotomic_form(family_zeta("star:5")));
    CHECK(star.order == 3);
    CHECK(star.omega == std::vector<long>{4, 4, 4});
    CHECK(star.terms.size() == 4);
    CHECK(star.C == -1);
    CHECK(star.D == -8);
    int sum_exp = 0;
    std::multiset<Rational> shifts;
    for (const auto& t : star.terms) {
        sum_exp += t.exponent;
        shifts.insert(t.shift);
    }
    CHECK(sum_exp == 0);  // equal numbers of +1 and -1 exponents when a > 0
    CHECK(shifts == std::multiset<Rational>{8, 10, 10, 12});
    for (const auto& t : star.terms)
        CHECK(t.exponent == ((t.shift == 10) ? 1 : -1));  // sign * (-1)^{|I|}
}

TEST_CASE("series route and integral route agree on Z_f") {
    for (const char* spec : {"cycle:3", "cycle:4", "cycle:5", "star:4", "bipartite:2,3"}) {
        RationalFunction f = family_zeta(spec);
        AbsoluteZetaExpression expr = kurokawa_decompose(to_cyclotomic_form(f));
        // w stays off the pole set {1, ..., b} of Z_f (b is 3 for K_{2,3}).
        for (Complex w : {Complex(3.5), Complex(4.0), Complex(4.75)}) {
            Complex s = (w == Complex(4.0)) ? Complex(1.0) : Complex(2.0);
            Complex series = absolute_hurwitz_Z(expr, w, s);
            MellinResult integral = mellin_Z(f, w, s);
            CHECK(std::abs(series - integral.value) < 1e-6);
            CHECK(integral.abs_err < 1e-6);
        }
    }
    // Complex (w, s) off the axes.
    RationalFunction f = family_zeta("cycle:4");
    AbsoluteZetaExpression expr = kurokawa_decompose(to_cyclotomic_form(f));
    Complex w(2.5, 1.0), s(1.0, 0.5);
    CHECK(std::abs(absolute_hurwitz_Z(expr, w, s) - mellin_Z(f, w, s).value) < 1e-6);
}

TEST_CASE("integral transform hits the pole set of Z_f") {
    RationalFunction f = family_zeta("cycle:4");
    // b = 2: poles at w = 1 and w = 2.
    CHECK_THROWS_AS(mellin_Z(f, 2.0, 2.0), PoleError);
    CHECK_THROWS_AS(mellin_Z(f, 1.0, 2.0), PoleError);
    // Decay at infinity requires Re s > deg f; deg here is -8.
    CHECK_THROWS_AS(mellin_Z(f, 3.0, -9.0), ConvergenceError);
}

TEST_CASE("functional equation residuals across bipartite families") {
    const struct {
        const char* spec;
        Rational expect_d;
        int expect_c;
    } cases[] = {
        {"bipartite:1,3", -6, -1},   // the star on 4 vertices
        {"bipartite:2,2", -8, 1},    // the 4-cycle
        {"bipartite:2,3", -12, -1},
        {"bipartite:1,1", -2, -1},   // single edge
        {"bipartite:3,3", -18, -1},
    };
    const Complex samples[] = {Complex(1.3, 0.0), Complex(0.7, 0.4), Complex(-0.6, 0.3)};
    for (const auto& c : cases) {
        AbsoluteZetaExpression expr = kurokawa_decompose(to_cyclotomic_form(family_zeta(c.spec)));
        CHECK(expr.D == c.expect_d);
        CHECK(expr.C == c.expect_c);
        for (Complex s : samples) {
            FunctionalEquationReport rep = functional_equation_check(expr, s);
            CHECK(rep.residual < 1e-6);
        }
    }
}

TEST_CASE("integral transform against the double zeta for cycle forms") {
    // f = 1/(u^N - 1)^2 has Z_f(w, s) = zeta_2(w, s + 2N, (N, N)).
    for (long n : {3L, 4L, 5L}) {
        RationalFunction f =
            rf_normalize(Polynomial({Rational(1)}), Polynomial::unit_factor(static_cast<int>(n)).pow(2));
        for (auto [w, s] : {std::pair<Complex, Complex>{3.0, 2.0},
                            std::pair<Complex, Complex>{4.0, 1.0},
                            std::pair<Complex, Complex>{3.5, 0.5}}) {
            Complex expect = multiple_hurwitz_zeta(w, s + Complex(static_cast<double>(2 * n)),
                                                   {n, n});
            MellinResult got = mellin_Z(f, w, s);
            CHECK(std::abs(got.value - expect) < 1e-6);
        }
    }
}
