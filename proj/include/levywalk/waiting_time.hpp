// waiting_time.hpp
// Inter-measurement interval laws: the heavy-tailed Levy density
//   rho(t) = alpha/(1+alpha) * { 1 on [0,1),  t^-(alpha+1) on [1,inf) }
// plus fixed-period and Gaussian baselines. Sampling is exact inverse-CDF.

#pragma once

#include <variant>

#include "levywalk/rng.hpp"

namespace levywalk {

struct LevyLaw {
    double alpha; // 0 < alpha <= 2
};

struct FixedLaw {
    long period; // >= 1
};

struct GaussianLaw {
    double mean;   // > 0
    double stddev; // > 0
};

using WaitingTimeLaw = std::variant<LevyLaw, FixedLaw, GaussianLaw>;

// Policy for continuous draws with t < 1, whose integer part would be a
// zero-length interval. ClampToOne maps them to T = 1; Redraw resamples
// until T >= 1. Either way the power-law tail is untouched.
enum class ZeroIntervalPolicy { ClampToOne, Redraw };

// Throws std::invalid_argument on out-of-range parameters.
void validate(const WaitingTimeLaw& law);

// CDF of the Levy density:
//   F(t) = alpha*t/(1+alpha)                       for t in [0,1)
//   F(t) = [alpha + 1 - t^-alpha] / (1+alpha)      for t >= 1
double levy_cdf(double alpha, double t);

// Strictly increasing inverse of levy_cdf on u in [0,1).
double levy_inverse_cdf(double alpha, double u);

// Integer interval T >= 1 drawn from the law.
long sample_interval(const WaitingTimeLaw& law, SplitMix64& rng,
                     ZeroIntervalPolicy policy = ZeroIntervalPolicy::ClampToOne);

} // namespace levywalk
