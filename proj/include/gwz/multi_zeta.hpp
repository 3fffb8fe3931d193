#pragma once

#include <vector>

#include "gwz/hurwitz.hpp"
#include "gwz/rational.hpp"

namespace gwz {

// Quasi-polynomial form of the representation count
//   c(y) = #{ n in Z_{>=0}^r : n.omega = y }.
// With L = lcm(omega), for y = rho + k L the count is a polynomial in k of
// degree < r, one polynomial per residue rho.
struct QuasiPolynomial {
    long period = 1;
    // residue_coeffs[rho][j]: c(rho + k*period) = sum_j residue_coeffs[rho][j] k^j
    std::vector<std::vector<Rational>> residue_coeffs;

    Integer eval(long y) const;
};

// Exact fit from dynamic-programming counts, verified on held-out samples.
QuasiPolynomial representation_counts(const std::vector<long>& omega);

// Multiple Hurwitz zeta zeta_r(w, x, omega) = sum_{n >= 0} (x + n.omega)^{-w},
// analytically continued; poles on w in {1, ..., r}. Requires Re x > 0.
Complex multiple_hurwitz_zeta(Complex w, Complex x, const std::vector<long>& omega);

// Partial derivative in w of the above.
Complex multiple_hurwitz_zeta_dw(Complex w, Complex x, const std::vector<long>& omega);

// log Gamma_r(x, omega) = d/dw zeta_r(w, x, omega) at w = 0. Arguments with
// Re x <= 0 are continued by the ladder
//   log Gamma_r(x) = log Gamma_r(x + omega_1) + log Gamma_{r-1}(x, omega_2..),
// with base log Gamma_0(x) = -Log x; real x <= 0 on the lattice is a pole.
// The result is well defined modulo 2 pi i.
Complex log_multiple_gamma(Complex x, const std::vector<long>& omega);

// log S_r(x, omega) for S_r(x) = Gamma_r(x)^{-1} Gamma_r(|omega| - x)^{(-1)^r},
// modulo 2 pi i.
Complex log_multiple_sine(Complex x, const std::vector<long>& omega);

}  // namespace gwz
