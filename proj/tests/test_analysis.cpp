#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "levywalk/analysis.hpp"
#include "levywalk/rng.hpp"

using namespace levywalk;

TEST_CASE("verbatim truncated moments at the singular alphas") {
    const double e = std::exp(1.0);
    const MomentPair m1 = closed_form_truncated_moments(1.0, e);
    CHECK(m1.first == doctest::Approx(1.0).epsilon(1e-9));
    const MomentPair m2 = closed_form_truncated_moments(2.0, e);
    CHECK(m2.second == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
}

TEST_CASE("numeric moments at t = 1 reduce to the flat piece") {
    for (const double alpha : {0.5, 1.0, 2.0}) {
        const MomentPair m = numeric_truncated_moments(alpha, 1.0);
        CHECK(m.first == doctest::Approx(alpha / (2.0 * (1.0 + alpha))).epsilon(1e-10));
        CHECK(m.second == doctest::Approx(alpha / (3.0 * (1.0 + alpha))).epsilon(1e-10));
    }
}

TEST_CASE("second moment: closed form agrees with quadrature") {
    for (const double alpha : {0.5, 1.0, 1.5, 2.0}) {
        for (const double t : {10.0, 1e3, 1e6}) {
            const MomentPair closed = closed_form_truncated_moments(alpha, t);
            const MomentPair numeric = numeric_truncated_moments(alpha, t);
            CHECK(std::abs(closed.second - numeric.second) <=
                  1e-8 * std::abs(numeric.second));
        }
    }
}

TEST_CASE("first moment: closed form differs by the documented constant") {
    // The braces' leading constant: verbatim 1 vs 1/2 from direct integration.
    const double alpha = 1.5;
    const MomentPair closed = closed_form_truncated_moments(alpha, 1e3);
    const MomentPair numeric = numeric_truncated_moments(alpha, 1e3);
    const double offset = alpha / (1.0 + alpha) * 0.5;
    CHECK(closed.first - numeric.first == doctest::Approx(offset).epsilon(1e-7));
}

TEST_CASE("large-horizon dominance of the tail term for alpha < 1") {
    const double alpha = 0.5;
    const double t = 1e12;
    const MomentPair numeric = numeric_truncated_moments(alpha, t);
    const double dominant = alpha / (1.0 + alpha) * std::pow(t, 1.0 - alpha) / (1.0 - alpha);
    CHECK(numeric.first == doctest::Approx(dominant).epsilon(1e-4));
}

TEST_CASE("finite-horizon exponent approaches the asymptotic limits") {
    CHECK(analytic_exponent_finite(2.0, 1e12) == doctest::Approx(0.5).epsilon(0.05));
    CHECK(analytic_exponent_finite(0.5, 1e12) == doctest::Approx(1.0).epsilon(0.05));
    const double near = analytic_exponent_finite(1.5, 1e6);
    const double far = analytic_exponent_finite(1.5, 1e3);
    CHECK(std::abs(near - 0.75) < std::abs(far - 0.75));
}

TEST_CASE("finite exponent rejects t <= 1") {
    CHECK_THROWS_AS(analytic_exponent_finite(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("asymptotic exponent values and continuity") {
    CHECK(analytic_exponent_asymptotic(0.5) == doctest::Approx(1.0));
    CHECK(analytic_exponent_asymptotic(1.5) == doctest::Approx(0.75));
    CHECK(analytic_exponent_asymptotic(2.0) == doctest::Approx(0.5));
    for (const double eps : {1e-3, 1e-6, 1e-9}) {
        CHECK(std::abs(analytic_exponent_asymptotic(1.0 - eps) -
                       analytic_exponent_asymptotic(1.0 + eps)) <= eps);
    }
    CHECK_THROWS_AS(analytic_exponent_asymptotic(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(analytic_exponent_asymptotic(2.1), std::invalid_argument);
}

TEST_CASE("finite exponent converges monotonically in log t past 1e3") {
    for (const double alpha : {0.25, 0.75, 1.25, 1.75}) {
        const double limit = analytic_exponent_asymptotic(alpha);
        double prev_gap = 1e9;
        for (const double t : {1e3, 1e4, 1e6, 1e8, 1e10}) {
            const double gap = std::abs(analytic_exponent_finite(alpha, t) - limit);
            CHECK(gap <= prev_gap + 1e-12);
            prev_gap = gap;
        }
    }
}

TEST_CASE("fit recovers exact power laws") {
    std::vector<std::pair<double, double>> series;
    for (double t = 1.0; t <= 2000.0; t *= 1.3) {
        series.emplace_back(t, 3.0 * std::pow(t, 0.75));
    }
    const FitResult fit = fit_power_law(series, 10, 1000);
    CHECK(fit.exponent_c == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    series.clear();
    for (double t = 1.0; t <= 2000.0; t *= 1.3) {
        series.emplace_back(t, t);
    }
    CHECK(fit_power_law(series, 1, 2000).exponent_c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit input validation") {
    std::vector<std::pair<double, double>> series{{1.0, 1.0}, {2.0, 2.0}};
    CHECK_THROWS_AS(fit_power_law(series, 1, 2), std::invalid_argument);
    series.push_back({3.0, -1.0});
    CHECK_THROWS_AS(fit_power_law(series, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(fit_power_law(series, 3, 1), std::invalid_argument);
}

TEST_CASE("fit is unbiased under 1% multiplicative noise") {
    int within = 0;
    const int trials = 100;
    for (int seed = 0; seed < trials; ++seed) {
        SplitMix64 rng(static_cast<std::uint64_t>(seed));
        std::vector<std::pair<double, double>> series;
        for (double t = 10.0; t <= 1e4; t *= 1.25) {
            const double noise = 1.0 + 0.01 * (2.0 * rng.uniform() - 1.0);
            series.emplace_back(t, 2.0 * std::pow(t, 0.66) * noise);
        }
        const FitResult fit = fit_power_law(series, 10, 10000);
        if (std::abs(fit.exponent_c - 0.66) <= 2.0 * fit.stderr_c) ++within;
    }
    // ~95% coverage expected; allow slack.
    CHECK(within >= 85);
}
