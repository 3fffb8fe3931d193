#pragma once

#include <complex>

namespace gwz {

using Complex = std::complex<double>;

// Hurwitz zeta zeta(s, a) for Re a > 0, s != 1, by Euler-Maclaurin summation.
// Accurate to roughly 1e-12 relative for |s| <= 40.
Complex hurwitz_zeta(Complex s, Complex a);

// d/ds zeta(s, a), differentiating the Euler-Maclaurin expansion termwise.
Complex hurwitz_zeta_ds(Complex s, Complex a);

// Principal branch log Gamma(z) (Lanczos approximation with reflection).
Complex complex_log_gamma(Complex z);

}  // namespace gwz
