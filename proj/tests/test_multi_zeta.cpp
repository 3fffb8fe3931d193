#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "gwz/multi_zeta.hpp"

using namespace gwz;

namespace {

// Brute-force double sum over the lattice, valid for Re w > 2 (r = 2).
// Collapses to a weighted single sum over y = n1 w1 + n2 w2 <= Y, then adds
// the tail of the smoothed count density t/(w1 w2) + offset as an integral.
// The leftover is the oscillating part of the count, O(Y^{-Re w}).
Complex double_sum_zeta2(Complex w, Complex x, long w1, long w2) {
    const long y_max = 200000;
    std::vector<double> c(y_max + 1, 0.0);
    c[0] = 1;
    for (long weight : {w1, w2})
        for (long y = weight; y <= y_max; ++y) c[y] += c[y - weight];
    Complex sum = 0;
    for (long y = y_max; y >= 0; --y)
        if (c[y] != 0) sum += c[y] * std::pow(x + Complex(static_cast<double>(y)), -w);

    double density = 1.0 / (static_cast<double>(w1) * w2);
    long period = std::lcm(w1, w2);
    double offset = 0;
    for (long y = y_max - period + 1; y <= y_max; ++y) offset += c[y] - density * y;
    offset /= period;
    // integral_{y_max}^{inf} (density t + offset)(x + t)^{-w} dt in u = x + t
    Complex u0 = x + Complex(static_cast<double>(y_max));
    Complex tail = density * std::pow(u0, Complex(2.0) - w) / (w - Complex(2.0)) +
                   (offset - density * x) * std::pow(u0, Complex(1.0) - w) / (w - Complex(1.0));
    // sum_{y > y_max} g(y) = int_{y_max} g - g(y_max)/2 + O(g'), smoothed g.
    tail -= Complex(0.5) * (density * static_cast<double>(y_max) + offset) * std::pow(u0, -w);
    return sum + tail;
}

}  // namespace

TEST_CASE("representation counts: exact values and quasi-polynomial fit") {
    // omega = (1, 1): c(y) = y + 1.
    QuasiPolynomial q11 = representation_counts({1, 1});
    for (long y = 0; y < 20; ++y) CHECK(q11.eval(y) == y + 1);

    // omega = (2, 3): the coin counting sequence 1,0,1,1,1,1,2,1,2,2,2,2,3,...
    QuasiPolynomial q23 = representation_counts({2, 3});
    long expect23[13] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3};
    for (long y = 0; y <= 12; ++y) CHECK(q23.eval(y) == expect23[y]);

    // omega = (1, 2, 3): partition-like counts, checked against a direct triple loop.
    QuasiPolynomial q123 = representation_counts({1, 2, 3});
    for (long y = 0; y < 30; ++y) {
        long count = 0;
        for (long a = 0; a <= y; ++a)
            for (long b = 0; a + 2 * b <= y; ++b)
                if ((y - a - 2 * b) % 3 == 0) ++count;
        CHECK(q123.eval(y) == count);
    }

    CHECK_THROWS_AS(representation_counts({2, 0}), ValidationError);
}

TEST_CASE("double zeta against the direct double sum") {
    // zeta_2(3, 2, (1,1)) = zeta(2) - zeta(3) exactly.
    const double pi = 3.14159265358979323846;
    double apery = 1.2020569031595942854;
    Complex z = multiple_hurwitz_zeta(3.0, 2.0, {1, 1});
    CHECK(std::abs(z - Complex(pi * pi / 6 - apery)) < 1e-10);
    CHECK(std::abs(z - double_sum_zeta2(3.0, 2.0, 1, 1)) < 1e-6);

    CHECK(std::abs(multiple_hurwitz_zeta(4.0, 1.0, {1, 2}) - double_sum_zeta2(4.0, 1.0, 1, 2)) <
          1e-8);
    CHECK(std::abs(multiple_hurwitz_zeta(3.5, 0.5, {3, 3}) - double_sum_zeta2(3.5, 0.5, 3, 3)) <
          1e-6);
    Complex wc(3.0, 1.0), xc(1.5, 0.5);
    CHECK(std::abs(multiple_hurwitz_zeta(wc, xc, {2, 3}) - double_sum_zeta2(wc, xc, 2, 3)) < 1e-6);
}

TEST_CASE("double zeta with unit weights reduces to ordinary hurwitz zetas") {
    // sum_{n>=0} (n+1)(x+n)^{-w} = zeta(w-1, x) + (1-x) zeta(w, x).
    for (Complex w : {Complex(2.5), Complex(3.0, 1.0), Complex(-0.5, 0.3)})
        for (Complex x : {Complex(1.0), Complex(0.7, 0.2), Complex(5.0)}) {
            Complex lhs = multiple_hurwitz_zeta(w, x, {1, 1});
            Complex rhs = hurwitz_zeta(w - Complex(1.0), x) + (Complex(1.0) - x) * hurwitz_zeta(w, x);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
}

TEST_CASE("weight permutation and integer scaling symmetries") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> re(0.2, 3.0), im(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Complex w(re(rng), im(rng)), x(re(rng), im(rng));
        Complex a = multiple_hurwitz_zeta(w, x, {1, 2, 3});
        CHECK(std::abs(a - multiple_hurwitz_zeta(w, x, {3, 1, 2})) < 1e-9 * (1 + std::abs(a)));
        // zeta_r(w, 2x, 2 omega) = 2^{-w} zeta_r(w, x, omega).
        Complex b = multiple_hurwitz_zeta(w, 2.0 * x, {2, 4, 6});
        Complex scaled = std::pow(Complex(2.0), -w) * a;
        CHECK(std::abs(b - scaled) < 1e-9 * (1 + std::abs(scaled)));
    }
}

TEST_CASE("w-derivative against finite differences") {
    double h = 1e-6;
    for (Complex w : {Complex(0.0), Complex(2.5, 0.5)})
        for (Complex x : {Complex(1.5), Complex(2.0, 1.0)}) {
            Complex fd = (multiple_hurwitz_zeta(w + Complex(h), x, {1, 2}) -
                          multiple_hurwitz_zeta(w - Complex(h), x, {1, 2})) /
                         (2 * h);
            CHECK(std::abs(multiple_hurwitz_zeta_dw(w, x, {1, 2}) - fd) < 1e-6);
        }
}

TEST_CASE("first multiple gamma is the classical gamma up to sqrt(2 pi)") {
    const double log_sqrt_2pi = 0.5 * std::log(2 * 3.14159265358979323846);
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        Complex lg = log_multiple_gamma(x, {1});
        double expect = std::lgamma(x) - log_sqrt_2pi;
        CHECK(std::abs(lg - Complex(expect)) < 1e-9);
    }
}

TEST_CASE("gamma ladder recursion holds at positive arguments") {
    std::mt19937 rng(60221);
    std::uniform_real_distribution<double> re(0.1, 4.0), im(-2.0, 2.0);
    std::vector<long> omega = {2, 3};
    std::vector<long> rest = {3};
    for (int trial = 0; trial < 100; ++trial) {
        Complex x(re(rng), im(rng));
        Complex lhs = log_multiple_gamma(x, omega);
        Complex rhs = log_multiple_gamma(x + Complex(2.0), omega) + log_multiple_gamma(x, rest);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(lhs)));
    }
    // Continuation to Re x <= 0 agrees with pushing the ladder twice.
    Complex x(-1.3, 0.4);
    Complex lhs = log_multiple_gamma(x, omega);
    Complex rhs = log_multiple_gamma(x + Complex(2.0), omega) + log_multiple_gamma(x, rest);
    CHECK(std::abs(lhs - rhs) < 1e-9);
    CHECK_THROWS_AS(log_multiple_gamma(Complex(0.0), {1, 2}), PoleError);
}

TEST_CASE("multiple sine satisfies its reflection symmetry") {
    std::vector<long> omega = {1, 2};
    double total = 3.0;
    // r = 2: S_2(|omega| - x) = S_2(x)^{-1}, so the logs cancel mod 2 pi i.
    for (Complex x : {Complex(0.4), Complex(1.1, 0.6)}) {
        Complex a = log_multiple_sine(x, omega);
        Complex b = log_multiple_sine(Complex(total) - x, omega);
        Complex sum = (a + b) / Complex(0.0, 2 * 3.14159265358979323846);
        CHECK(std::abs(sum - Complex(std::round(sum.real()))) < 1e-9);
    }
    // r = 1: S_1(x, (1)) = 2 sin(pi x).
    const double pi = 3.14159265358979323846;
    for (double x : {0.3, 0.75}) {
        Complex s = std::exp(log_multiple_sine(x, {1}));
        CHECK(std::abs(s - Complex(2 * std::sin(pi * x))) < 1e-9);
    }
}
