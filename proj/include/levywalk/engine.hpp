// engine.hpp
// Full-wavefunction Monte Carlo: unitary segments punctuated by collapses
// at sampled intervals, with mergeable per-checkpoint moment accumulators.

#pragma once

#include <cstdint>
#include <vector>

#include "levywalk/rng.hpp"
#include "levywalk/waiting_time.hpp"
#include "levywalk/walk.hpp"

namespace levywalk {

struct SimConfig {
    WaitingTimeLaw law = LevyLaw{1.0};
    CoinAngle coin = hadamard_coin();
    QubitAmplitudes initial_qubit = sigma_y_eigenstate(+1);
    long trajectories = 1;
    long t_max = 2;
    std::vector<long> checkpoints; // strictly increasing, last <= t_max
    std::uint64_t master_seed = 0;
    ZeroIntervalPolicy zero_policy = ZeroIntervalPolicy::ClampToOne;
    int workers = 0; // 0 = hardware concurrency

    void validate() const; // throws std::invalid_argument
};

// ~`count` log-spaced integer times in [1, t_max], deduplicated.
std::vector<long> log_checkpoints(long t_max, int count = 60);

struct CheckpointSums {
    double sum_m1 = 0.0;
    double sum_m2 = 0.0;
    double sum_sigma = 0.0;
    double sum_sigma_sq = 0.0;
    long count = 0;
};

// Running per-checkpoint sums over trajectories. merge() is commutative and
// associative up to floating-point reordering (~1e-9 relative).
struct EnsembleAccumulator {
    std::vector<long> times;
    std::vector<CheckpointSums> sums;

    explicit EnsembleAccumulator(std::vector<long> checkpoint_times = {});
    void record(std::size_t checkpoint_index, double m1, double m2, double sigma);
    void merge(const EnsembleAccumulator& other);
};

struct StatsRow {
    long t;
    double mean_sigma;     // <sigma> over trajectories
    double rms_sigma;      // sqrt(<sigma^2>)
    double ensemble_sigma; // spread of the pooled distribution
    long count;
    double mean_m1; // ensemble mean position (not part of the CSV schema)
    double mean_m2; // ensemble mean second moment
};

struct EnsembleStats {
    std::vector<StatsRow> rows;
};

EnsembleStats finalize(const EnsembleAccumulator& acc);

// One trajectory: evolve from |0> x initial_qubit, collapsing at sampled
// intervals; record absolute-coordinate (m1, m2, sigma) at each checkpoint.
// Segments are truncated at t_max.
void run_trajectory(const SimConfig& cfg, SplitMix64& rng, EnsembleAccumulator& sink);

// Trajectories on independent streams keyed by (master_seed, index), sharded
// over workers, accumulators merged once in index order.
EnsembleStats run_ensemble(const SimConfig& cfg);

} // namespace levywalk
