#include <cmath>

#include "doctest.h"
#include "gwz/hurwitz.hpp"

using namespace gwz;

namespace {

// Summation oracle for Re s > 1: direct sum plus the integral tail and the
// trapezoid end correction, so the error is O(N^{-Re s - 1}).
Complex direct_hurwitz(Complex s, Complex a, int terms = 20000) {
    Complex sum = 0;
    for (int n = terms - 1; n >= 0; --n) sum += std::pow(a + Complex(n), -s);
    Complex edge = a + Complex(terms);
    return sum + std::pow(edge, Complex(1.0) - s) / (s - Complex(1.0)) +
           Complex(0.5) * std::pow(edge, -s);
}

}  // namespace

TEST_CASE("hurwitz zeta special values") {
    const double pi = 3.14159265358979323846;
    CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - Complex(pi * pi / 6)) < 1e-12);
    // zeta(s, 0.5) = (2^s - 1) zeta(s).
    CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - Complex(pi * pi / 2)) < 1e-12);
    // zeta(0, a) = 1/2 - a, also for complex a.
    for (Complex a : {Complex(1.0), Complex(3.0), Complex(0.25), Complex(2.0, 1.5)})
        CHECK(std::abs(hurwitz_zeta(0.0, a) - (Complex(0.5) - a)) < 1e-12);
    // zeta(-1, a) = -(a^2 - a + 1/6)/2.
    Complex a(1.5, 0.5);
    CHECK(std::abs(hurwitz_zeta(-1.0, a) + (a * a - a + Complex(1.0 / 6)) / 2.0) < 1e-12);
}

TEST_CASE("hurwitz zeta matches direct summation for Re s > 1") {
    for (Complex s : {Complex(3.0), Complex(2.5, 1.0), Complex(4.0, -2.0)})
        for (Complex a : {Complex(1.0), Complex(0.3), Complex(2.0, 0.7)})
            CHECK(std::abs(hurwitz_zeta(s, a) - direct_hurwitz(s, a)) < 1e-8);
}

TEST_CASE("s-derivative at 0 gives the log gamma normalization") {
    const double half_log_2pi = 0.5 * std::log(2 * 3.14159265358979323846);
    // zeta'(0, a) = log Gamma(a) - log sqrt(2 pi).
    for (double a : {0.5, 1.0, 2.0, 3.0, 7.25}) {
        Complex lhs = hurwitz_zeta_ds(0.0, a);
        double rhs = std::lgamma(a) - half_log_2pi;
        CHECK(std::abs(lhs - Complex(rhs)) < 1e-11);
    }
    // Finite-difference cross-check of the derivative at a generic point.
    Complex s(1.7, 0.4), a(0.9, 0.2);
    double h = 1e-6;
    Complex fd = (hurwitz_zeta(s + Complex(h), a) - hurwitz_zeta(s - Complex(h), a)) / (2 * h);
    CHECK(std::abs(hurwitz_zeta_ds(s, a) - fd) < 1e-7);
}

TEST_CASE("complex log gamma against the real gamma function") {
    for (double x : {0.5, 1.0, 2.5, 10.0})
        CHECK(std::abs(complex_log_gamma(x) - Complex(std::lgamma(x))) < 1e-12);
    // Recurrence log Gamma(z+1) = log z + log Gamma(z) off the real axis.
    Complex z(0.3, 1.2);
    CHECK(std::abs(complex_log_gamma(z + Complex(1.0)) - std::log(z) - complex_log_gamma(z)) <
          1e-12);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    const double pi = 3.14159265358979323846;
    Complex lhs = complex_log_gamma(z) + complex_log_gamma(Complex(1.0) - z);
    Complex rhs = std::log(Complex(pi) / std::sin(Complex(pi) * z));
    CHECK(std::abs(std::exp(lhs) - std::exp(rhs)) < 1e-12);
}
