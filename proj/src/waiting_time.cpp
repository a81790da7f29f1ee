#include "levywalk/waiting_time.hpp"

#include <cmath>
#include <stdexcept>

namespace levywalk {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
        throw std::invalid_argument("alpha must lie in (0, 2]");
    }
}

// Box-Muller from the owned stream; only one of the pair is used.
double standard_normal(SplitMix64& rng) {
    double u1 = rng.uniform();
    while (u1 <= 0.0) u1 = rng.uniform();
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

} // namespace

void validate(const WaitingTimeLaw& law) {
    std::visit(
        [](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, LevyLaw>) {
                check_alpha(l.alpha);
            } else if constexpr (std::is_same_v<L, FixedLaw>) {
                if (l.period < 1) throw std::invalid_argument("period must be >= 1");
            } else {
                if (!(l.mean > 0.0)) throw std::invalid_argument("mean must be > 0");
                if (!(l.stddev > 0.0)) throw std::invalid_argument("stddev must be > 0");
            }
        },
        law);
}

double levy_cdf(double alpha, double t) {
    check_alpha(alpha);
    if (t <= 0.0) return 0.0;
    if (t < 1.0) return alpha * t / (1.0 + alpha);
    return (alpha + 1.0 - std::pow(t, -alpha)) / (1.0 + alpha);
}

double levy_inverse_cdf(double alpha, double u) {
    check_alpha(alpha);
    if (!(u >= 0.0) || !(u < 1.0)) {
        throw std::invalid_argument("u must lie in [0, 1)");
    }
    const double knee = alpha / (1.0 + alpha); // F(1)
    if (u < knee) return u * (1.0 + alpha) / alpha;
    return std::pow((1.0 + alpha) * (1.0 - u), -1.0 / alpha);
}

long sample_interval(const WaitingTimeLaw& law, SplitMix64& rng, ZeroIntervalPolicy policy) {
    validate(law);
    return std::visit(
        [&](const auto& l) -> long {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, LevyLaw>) {
                for (;;) {
                    const double t = levy_inverse_cdf(l.alpha, rng.uniform());
                    const long T = static_cast<long>(std::floor(t));
                    if (T >= 1) return T;
                    if (policy == ZeroIntervalPolicy::ClampToOne) return 1;
                }
            } else if constexpr (std::is_same_v<L, FixedLaw>) {
                return l.period;
            } else {
                const long T = std::lround(l.mean + l.stddev * standard_normal(rng));
                return T < 1 ? 1 : T;
            }
        },
        law);
}

} // namespace levywalk
