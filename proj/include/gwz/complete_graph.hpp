#pragma once

#include <string>
#include <vector>

#include "gwz/multi_zeta.hpp"
#include "gwz/rational.hpp"

namespace gwz {

// Shared constants of the K_n route: L = n(n-3)/2 index pairs, M total
// indices, and the conjugate roots alpha, beta of u^2 + 2u/(n-1) + 1
// (alpha beta = 1, alpha + beta = -2/(n-1)).
struct CompleteGraphParams {
    long n = 0;
    long L = 0;
    long M = 0;
    Rational alpha_re;      // -1/(n-1)
    Rational alpha_im_sq;   // n(n-2)/(n-1)^2
};

CompleteGraphParams complete_graph_params(long n);

// P_l: power-series coefficients of (1 + 2u/(n-1) + u^2)^{-1}.
struct PSeries {
    long n = 0;
    std::vector<Rational> coeffs;  // P_0 .. P_lmax

    // (n-1)/sqrt(n(n-2)), from P_l = sin((l+1)theta)/sin(theta).
    double bound() const;
};

// Computes the closed binomial sum and the three-term recurrence and insists
// they agree exactly.
PSeries p_coefficients(long n, int lmax);

// Collapsed one-dimensional weights: c_t is the t-th coefficient of
// [ (1-v)^2 (1-v^2)^L (1 + 2v/(n-1) + v^2)^{n-1} ]^{-1}, so that
// Z(w, s) = (-1)^L sum_t c_t (t + 2M - 2 + s)^{-w}; 2M - 2 is the smallest
// exponent in the multi-index display.
std::vector<Rational> collapsed_coefficients(long n, int count);

struct TruncatedZ {
    Complex value;
    double tail_estimate = 0;
};

// Truncated evaluation of the K_n absolute Hurwitz zeta series. The
// coefficients grow like t^{L+1}, so the sum converges only for
// Re(w) > L + 2; outside that region a ConvergenceError is thrown unless
// allow_divergent is set (then tail_estimate is infinite). n = 3 is a cycle
// graph and is routed to the exact zeta_2(w, s+6, (3,3)) closed form.
TruncatedZ truncated_Z_Kn(long n, Complex w, Complex s, int trunc,
                          bool allow_divergent = false);

// The regularized product of the K_n absolute zeta, as structure only: it has
// no numeric value here (the defining w-series diverges near w = 0).
struct FormalProductKn {
    long n = 0;
    long L = 0;
    long M = 0;
    int free_indices = 2;       // k_1, k_2 with weight 1
    long doubled_indices = 0;   // L indices with weight 2
    long weighted_indices = 0;  // n-1 indices carrying P_{k_N} factors
    std::string exponent_rule;
    bool regularized_only = true;
};

FormalProductKn formal_product_Kn(long n);

}  // namespace gwz
