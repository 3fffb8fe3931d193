#include "gwz/hurwitz.hpp"

#include <array>
#include <cmath>

#include "gwz/errors.hpp"

namespace gwz {

namespace {

// B_{2j} values; the division by (2j)! happens at use sites.
constexpr std::array<double, 10> kBernoulli2j = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
    -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
};

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

int shift_count(Complex s, Complex a) {
    // Push a + N far enough out that the asymptotic tail converges fast.
    double target = 28.0 + 0.9 * std::abs(s.imag()) + 0.35 * std::abs(s.real());
    int n = static_cast<int>(std::ceil(target - a.real()));
    return n < 0 ? 0 : n;
}

void check_args(Complex s, Complex a) {
    if (!(a.real() > 0)) throw DomainError("hurwitz_zeta requires Re a > 0");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz_zeta has a pole at s = 1");
}

}  // namespace

Complex hurwitz_zeta(Complex s, Complex a) {
    check_args(s, a);
    int n = shift_count(s, a);
    Complex sum = 0;
    for (int k = 0; k < n; ++k) sum += std::pow(a + Complex(k), -s);
    Complex x = a + Complex(n);
    Complex xs = std::pow(x, -s);
    sum += xs * x / (s - 1.0);
    sum += xs * 0.5;
    // Asymptotic correction: sum_j B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}.
    Complex poch = s;  // (s)_1
    Complex xpow = xs / x;  // x^{-s-1}
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulli2j[j - 1] / factorial(2 * j) * poch * xpow;
        if (j < 10) {
            poch *= (s + Complex(2.0 * j - 1)) * (s + Complex(2.0 * j));
            xpow /= x * x;
        }
    }
    return sum;
}

Complex hurwitz_zeta_ds(Complex s, Complex a) {
    check_args(s, a);
    int n = shift_count(s, a);
    Complex sum = 0;
    for (int k = 0; k < n; ++k) {
        Complex lk = std::log(a + Complex(k));
        sum += -lk * std::pow(a + Complex(k), -s);
    }
    Complex x = a + Complex(n);
    Complex lx = std::log(x);
    Complex xs = std::pow(x, -s);
    // d/ds [ x^{1-s}/(s-1) ] and d/ds [ x^{-s}/2 ].
    sum += xs * x * (-lx / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
    sum += -lx * xs * 0.5;
    // Correction terms with product-rule derivative of the Pochhammer factor.
    Complex poch = s, dpoch = 1;
    Complex xpow = xs / x;
    for (int j = 1; j <= 10; ++j) {
        double c = kBernoulli2j[j - 1] / factorial(2 * j);
        sum += c * (dpoch - poch * lx) * xpow;
        if (j < 10) {
            Complex f1 = s + Complex(2.0 * j - 1), f2 = s + Complex(2.0 * j);
            dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
            poch *= f1 * f2;
            xpow /= x * x;
        }
    }
    return sum;
}

Complex complex_log_gamma(Complex z) {
    static const double g = 7;
    static const std::array<double, 9> c = {
        0.99999999999980993, 676.5203681218851, -1259.1392167224028,
        771.32342877765313, -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    const double pi = 3.14159265358979323846;
    if (z.real() < 0.5) {
        // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
        return std::log(pi) - std::log(std::sin(pi * z)) - complex_log_gamma(1.0 - z);
    }
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + Complex(static_cast<double>(i)));
    Complex t = z + g + 0.5;
    return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace gwz
