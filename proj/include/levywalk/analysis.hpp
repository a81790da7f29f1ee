// analysis.hpp
// Closed-form predictions for the spreading exponent (truncated waiting-time
// moments, finite-horizon and asymptotic forms) and log-log power-law fits.

#pragma once

#include <utility>
#include <vector>

namespace levywalk {

struct MomentPair {
    double first;   // <T_i> truncated at the horizon
    double second;  // <T_i^2> truncated at the horizon
    double horizon; // truncation time t
};

// Verbatim closed forms:
//   <T_i>   = a/(a+1) { 1   + (t^(1-a) - 1)/(1-a) }
//   <T_i^2> = a/(a+1) { 1/3 + (t^(2-a) - 1)/(2-a) }
// with the removable singularities at a = 1 (first) and a = 2 (second)
// replaced by ln t. Note: direct integration of the density over [0,1)
// gives a leading constant 1/2 in the braces of <T_i>, not 1; see
// numeric_truncated_moments, which is the ground truth.
MomentPair closed_form_truncated_moments(double alpha, double t);

// Adaptive quadrature of x*rho(x) and x^2*rho(x) over [0, t], relative
// tolerance 1e-10.
MomentPair numeric_truncated_moments(double alpha, double t);

enum class MomentMethod { Numeric, ClosedForm };

// Finite-horizon exponent c = (1/2)(1 + log(<T^2>/<T>)/log t).
double analytic_exponent_finite(double alpha, double t,
                                MomentMethod method = MomentMethod::Numeric);

// Asymptotic exponent: 1 on [0,1], (3-alpha)/2 on [1,2].
double analytic_exponent_asymptotic(double alpha);

struct FitResult {
    double exponent_c;
    double stderr_c;
    double r_squared;
    long t_lo;
    long t_hi;
    int points_used;
};

// Unweighted least squares of log(sigma) on log(t) over [t_lo, t_hi].
// Requires >= 3 in-window points with sigma > 0.
FitResult fit_power_law(const std::vector<std::pair<double, double>>& series, long t_lo,
                        long t_hi);

} // namespace levywalk
