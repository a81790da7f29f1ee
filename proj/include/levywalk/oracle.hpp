// oracle.hpp
// Semi-analytic variance engine. The free-walk position distribution after
// T steps acts as a transition kernel q_n(T); its variances sigma_q^2(T)
// drive an exact additive recurrence per sampled interval sequence, with no
// wavefunction in the loop. The master-equation convolution is kept as an
// independent cross-check.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levywalk/engine.hpp"
#include "levywalk/walk.hpp"

namespace levywalk {

// q over displacements -T..T from the collapse site; q[i] is offset i - T.
struct Kernel {
    long T = 0;
    std::vector<double> q;

    double first_moment() const;
    double second_moment() const;
    double variance() const;
};

// Position distribution of a fresh walker evolved T steps, as offsets.
Kernel build_kernel(CoinAngle coin, const QubitAmplitudes& qubit, long T);

// sigma_q^2(T) and m_1q(T) for T = 0..t_max, computed in one incremental
// evolution pass (O(t_max^2) total).
struct SigmaQTable {
    CoinAngle coin;
    QubitAmplitudes qubit;
    std::vector<double> values; // values[T] = sigma_q^2(T)
    std::vector<double> m1q;    // m1q[T] = first moment of q(T)

    long t_max() const { return static_cast<long>(values.size()) - 1; }
};

SigmaQTable build_sigma_q_table(CoinAngle coin, const QubitAmplitudes& qubit, long t_max);

// Richardson-style limit of values[T]/T^2 over the largest dyadic T, with
// the residual spread as an uncertainty. Requires t_max >= 256.
struct KEstimate {
    double k;
    double spread;
};

KEstimate estimate_k(const SigmaQTable& table);

// Dense probability vector over sites origin..origin+size-1.
struct Distribution {
    long origin = 0;
    std::vector<double> p;

    double first_moment() const;
    double second_moment() const;
    double variance() const;
};

// One master-equation update: P'_n = sum_j q_{n-j} P_j.
Distribution convolve_master(const Distribution& dist, const Kernel& kernel);

// sigma^2 at each checkpoint for a fixed interval sequence: the sum of
// sigma_q^2 over completed segments plus sigma_q^2(elapsed) mid-segment.
std::vector<double> recurrence_trajectory(std::span<const long> intervals,
                                          const SigmaQTable& table,
                                          std::span<const long> checkpoints);

// Ensemble of recurrence trajectories with sampled interval sequences; same
// stream derivation and merge contract as run_ensemble.
EnsembleStats oracle_ensemble(const WaitingTimeLaw& law, const SigmaQTable& table,
                              long trajectories, long t_max,
                              const std::vector<long>& checkpoints,
                              std::uint64_t master_seed, int workers = 0,
                              ZeroIntervalPolicy policy = ZeroIntervalPolicy::ClampToOne);

} // namespace levywalk
