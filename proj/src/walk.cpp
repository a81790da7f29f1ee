#include "levywalk/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace levywalk {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

bool QubitAmplitudes::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

QubitAmplitudes sigma_y_eigenstate(int sign) {
    return QubitAmplitudes{cxd{kInvSqrt2, 0.0}, cxd{0.0, sign >= 0 ? kInvSqrt2 : -kInvSqrt2}};
}

WalkerState WalkerState::localized(long site, const QubitAmplitudes& qubit) {
    if (!qubit.is_normalized(1e-9)) {
        throw std::invalid_argument("initial qubit is not normalized");
    }
    WalkerState s;
    s.origin_ = site;
    s.a_ = {qubit.left};
    s.b_ = {qubit.right};
    s.time_ = 0;
    return s;
}

void WalkerState::step(CoinAngle coin) {
    const double c = std::cos(coin.theta);
    const double s = std::sin(coin.theta);
    const std::size_t n = a_.size();
    std::vector<cxd> na(n + 2, cxd{});
    std::vector<cxd> nb(n + 2, cxd{});
    // New window index i maps to site origin-1+i.
    for (std::size_t i = 0; i < n; ++i) {
        na[i] = a_[i] * c + b_[i] * s;
        nb[i + 2] = a_[i] * s - b_[i] * c;
    }
    a_ = std::move(na);
    b_ = std::move(nb);
    origin_ -= 1;
    time_ += 1;
}

void WalkerState::evolve(CoinAngle coin, long steps) {
    for (long i = 0; i < steps; ++i) {
        step(coin);
    }
}

std::map<long, double> WalkerState::position_distribution() const {
    std::map<long, double> dist;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const double p = std::norm(a_[i]) + std::norm(b_[i]);
        if (p > 0.0) {
            dist[origin_ + static_cast<long>(i)] = p;
        }
    }
    return dist;
}

Moments WalkerState::moments() const {
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        const double p = std::norm(a_[i]) + std::norm(b_[i]);
        const double site = static_cast<double>(origin_ + static_cast<long>(i));
        m1 += site * p;
        m2 += site * site * p;
    }
    return Moments{m1, m2, m2 - m1 * m1};
}

double WalkerState::norm_sq() const {
    double total = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        total += std::norm(a_[i]) + std::norm(b_[i]);
    }
    return total;
}

cxd WalkerState::amplitude_left(long site) const {
    const long i = site - origin_;
    if (i < 0 || i >= static_cast<long>(a_.size())) return cxd{};
    return a_[static_cast<std::size_t>(i)];
}

cxd WalkerState::amplitude_right(long site) const {
    const long i = site - origin_;
    if (i < 0 || i >= static_cast<long>(b_.size())) return cxd{};
    return b_[static_cast<std::size_t>(i)];
}

CollapseOutcome WalkerState::collapse_measure(SplitMix64& rng) {
    const double total = norm_sq();
    if (!(total > 0.0)) {
        throw std::runtime_error("collapse_measure: degenerate zero-norm state");
    }
    // Sample the site by inverse CDF over P_n.
    const double u = rng.uniform() * total;
    double cum = 0.0;
    std::size_t idx = a_.size() - 1; // fall through to the last site on rounding
    for (std::size_t i = 0; i < a_.size(); ++i) {
        cum += std::norm(a_[i]) + std::norm(b_[i]);
        if (u < cum) {
            idx = i;
            break;
        }
    }
    const double p_site = std::norm(a_[idx]) + std::norm(b_[idx]);
    // Conditional chirality: p(+) = |a - i b|^2 / (2 P_n).
    const cxd minus = a_[idx] - cxd{0.0, 1.0} * b_[idx];
    const double p_plus = std::norm(minus) / (2.0 * p_site);
    const int sign = rng.uniform() < p_plus ? +1 : -1;
    const double p_cond = sign > 0 ? p_plus : 1.0 - p_plus;

    const long site = origin_ + static_cast<long>(idx);
    const QubitAmplitudes qubit = sigma_y_eigenstate(sign);
    origin_ = site;
    a_ = {qubit.left};
    b_ = {qubit.right};
    return CollapseOutcome{site, sign, p_site * p_cond};
}

} // namespace levywalk
