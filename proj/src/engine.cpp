#include "levywalk/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace levywalk {

void SimConfig::validate() const {
    levywalk::validate(law);
    if (trajectories < 1) throw std::invalid_argument("trajectories must be >= 1");
    if (t_max < 2) throw std::invalid_argument("t_max must be >= 2");
    if (checkpoints.empty()) throw std::invalid_argument("checkpoints must be nonempty");
    for (std::size_t i = 0; i + 1 < checkpoints.size(); ++i) {
        if (checkpoints[i] >= checkpoints[i + 1]) {
            throw std::invalid_argument("checkpoints must be strictly increasing");
        }
    }
    if (checkpoints.front() < 1 || checkpoints.back() > t_max) {
        throw std::invalid_argument("checkpoints must lie in [1, t_max]");
    }
    if (!initial_qubit.is_normalized(1e-9)) {
        throw std::invalid_argument("initial qubit is not normalized");
    }
}

std::vector<long> log_checkpoints(long t_max, int count) {
    std::vector<long> out;
    if (t_max < 1 || count < 1) return out;
    const double lo = 0.0;
    const double hi = std::log(static_cast<double>(t_max));
    for (int i = 0; i < count; ++i) {
        const double x = count == 1 ? hi : lo + (hi - lo) * i / (count - 1);
        const long t = std::lround(std::exp(x));
        if (out.empty() || t > out.back()) out.push_back(t);
    }
    if (out.back() != t_max) out.push_back(t_max);
    return out;
}

EnsembleAccumulator::EnsembleAccumulator(std::vector<long> checkpoint_times)
    : times(std::move(checkpoint_times)), sums(times.size()) {}

void EnsembleAccumulator::record(std::size_t checkpoint_index, double m1, double m2,
                                 double sigma) {
    CheckpointSums& s = sums[checkpoint_index];
    s.sum_m1 += m1;
    s.sum_m2 += m2;
    s.sum_sigma += sigma;
    s.sum_sigma_sq += sigma * sigma;
    s.count += 1;
}

void EnsembleAccumulator::merge(const EnsembleAccumulator& other) {
    if (other.times != times) throw std::invalid_argument("accumulator checkpoint mismatch");
    for (std::size_t i = 0; i < sums.size(); ++i) {
        sums[i].sum_m1 += other.sums[i].sum_m1;
        sums[i].sum_m2 += other.sums[i].sum_m2;
        sums[i].sum_sigma += other.sums[i].sum_sigma;
        sums[i].sum_sigma_sq += other.sums[i].sum_sigma_sq;
        sums[i].count += other.sums[i].count;
    }
}

EnsembleStats finalize(const EnsembleAccumulator& acc) {
    EnsembleStats stats;
    stats.rows.reserve(acc.times.size());
    for (std::size_t i = 0; i < acc.times.size(); ++i) {
        const CheckpointSums& s = acc.sums[i];
        StatsRow row{};
        row.t = acc.times[i];
        row.count = s.count;
        if (s.count > 0) {
            const double n = static_cast<double>(s.count);
            row.mean_sigma = s.sum_sigma / n;
            row.rms_sigma = std::sqrt(s.sum_sigma_sq / n);
            const double mean_m1 = s.sum_m1 / n;
            const double mean_m2 = s.sum_m2 / n;
            row.ensemble_sigma = std::sqrt(std::max(0.0, mean_m2 - mean_m1 * mean_m1));
            row.mean_m1 = mean_m1;
            row.mean_m2 = mean_m2;
        }
        stats.rows.push_back(row);
    }
    return stats;
}

void run_trajectory(const SimConfig& cfg, SplitMix64& rng, EnsembleAccumulator& sink) {
    WalkerState state = WalkerState::localized(0, cfg.initial_qubit);
    long t = 0;
    std::size_t next_ck = 0;
    const std::vector<long>& cks = sink.times;

    while (t < cfg.t_max) {
        const long drawn = sample_interval(cfg.law, rng, cfg.zero_policy);
        const long seg = std::min(drawn, cfg.t_max - t);
        for (long i = 0; i < seg; ++i) {
            state.step(cfg.coin);
            ++t;
            if (next_ck < cks.size() && cks[next_ck] == t) {
                const Moments m = state.moments();
                sink.record(next_ck, m.m1, m.m2, std::sqrt(std::max(0.0, m.variance)));
                ++next_ck;
            }
        }
        if (t < cfg.t_max) {
            state.collapse_measure(rng);
        }
    }
}

EnsembleStats run_ensemble(const SimConfig& cfg) {
    cfg.validate();
    int workers = cfg.workers > 0 ? cfg.workers
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<long>(workers, cfg.trajectories));

    std::vector<EnsembleAccumulator> shards(static_cast<std::size_t>(workers),
                                            EnsembleAccumulator(cfg.checkpoints));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const long per = cfg.trajectories / workers;
    const long extra = cfg.trajectories % workers;
    long start = 0;
    for (int w = 0; w < workers; ++w) {
        const long n = per + (w < extra ? 1 : 0);
        pool.emplace_back([&cfg, &shards, w, start, n] {
            EnsembleAccumulator& acc = shards[static_cast<std::size_t>(w)];
            for (long i = 0; i < n; ++i) {
                SplitMix64 rng =
                    stream_for(cfg.master_seed, static_cast<std::uint64_t>(start + i));
                run_trajectory(cfg, rng, acc);
            }
        });
        start += n;
    }
    for (auto& th : pool) th.join();

    // Contiguous index blocks merged in worker order keep the reduction in
    // trajectory order.
    EnsembleAccumulator total = std::move(shards.front());
    for (std::size_t w = 1; w < shards.size(); ++w) {
        total.merge(shards[w]);
    }
    return finalize(total);
}

} // namespace levywalk
