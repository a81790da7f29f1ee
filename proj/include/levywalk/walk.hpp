// walk.hpp
// Two-component walker wavefunction on the line: coin-shift step,
// position distribution, moments and the projective position+chirality
// measurement in the sigma_y basis.

#pragma once

#include <complex>
#include <map>
#include <vector>

#include "levywalk/rng.hpp"

namespace levywalk {

using cxd = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

struct QubitAmplitudes {
    cxd left;
    cxd right;

    double norm_sq() const { return std::norm(left) + std::norm(right); }
    bool is_normalized(double tol = kNormTolerance) const;
};

// Eigenstates (1, i*sign)/sqrt(2) of sigma_y. Post-measurement chirality is
// always one of these.
QubitAmplitudes sigma_y_eigenstate(int sign);

struct CoinAngle {
    double theta;
};

inline CoinAngle hadamard_coin() { return CoinAngle{0.78539816339744830962}; } // pi/4

struct CollapseOutcome {
    long site;           // absolute lattice index the walker collapsed onto
    int chirality_sign;  // +1 or -1
    double probability;  // joint probability of the sampled (site, sign)
};

struct Moments {
    double m1;
    double m2;
    double variance;
};

// Dense two-array window with an origin offset. Sites are absolute lattice
// indices; the window grows by one site per step and shrinks to a single
// site on collapse.
class WalkerState {
public:
    // Delta state at `site` with the given chirality; time = 0.
    // Throws std::invalid_argument if the qubit is not normalized.
    static WalkerState localized(long site, const QubitAmplitudes& qubit);

    // One application of the coin-shift map:
    //   a_n <- a_{n+1} cos(theta) + b_{n+1} sin(theta)
    //   b_n <- a_{n-1} sin(theta) - b_{n-1} cos(theta)
    void step(CoinAngle coin);

    // `steps` applications of step(); 0 is the identity.
    void evolve(CoinAngle coin, long steps);

    // P_n = |a_n|^2 + |b_n|^2 over the support, keyed by absolute site.
    std::map<long, double> position_distribution() const;

    Moments moments() const;

    double norm_sq() const;

    // Projective measurement of position and sigma_y chirality. The state
    // becomes localized at the sampled site with the sampled eigenstate
    // qubit; global time is unchanged.
    CollapseOutcome collapse_measure(SplitMix64& rng);

    long time() const { return time_; }
    long origin() const { return origin_; }
    long support_size() const { return static_cast<long>(a_.size()); }
    cxd amplitude_left(long site) const;
    cxd amplitude_right(long site) const;

private:
    WalkerState() = default;

    long origin_ = 0;
    std::vector<cxd> a_;
    std::vector<cxd> b_;
    long time_ = 0;
};

} // namespace levywalk
