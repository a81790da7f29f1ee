#include "levywalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace levywalk {

namespace {

double moments_of(const std::vector<double>& p, long origin, double& m2_out) {
    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double x = static_cast<double>(origin + static_cast<long>(i));
        m1 += x * p[i];
        m2 += x * x * p[i];
    }
    m2_out = m2;
    return m1;
}

} // namespace

double Kernel::first_moment() const {
    double m2;
    return moments_of(q, -T, m2);
}

double Kernel::second_moment() const {
    double m2;
    moments_of(q, -T, m2);
    return m2;
}

double Kernel::variance() const {
    double m2;
    const double m1 = moments_of(q, -T, m2);
    return m2 - m1 * m1;
}

double Distribution::first_moment() const {
    double m2;
    return moments_of(p, origin, m2);
}

double Distribution::second_moment() const {
    double m2;
    moments_of(p, origin, m2);
    return m2;
}

double Distribution::variance() const {
    double m2;
    const double m1 = moments_of(p, origin, m2);
    return m2 - m1 * m1;
}

Kernel build_kernel(CoinAngle coin, const QubitAmplitudes& qubit, long T) {
    if (T < 0) throw std::invalid_argument("T must be >= 0");
    WalkerState state = WalkerState::localized(0, qubit);
    state.evolve(coin, T);
    Kernel k;
    k.T = T;
    k.q.assign(static_cast<std::size_t>(2 * T + 1), 0.0);
    for (const auto& [site, prob] : state.position_distribution()) {
        k.q[static_cast<std::size_t>(site + T)] = prob;
    }
    return k;
}

SigmaQTable build_sigma_q_table(CoinAngle coin, const QubitAmplitudes& qubit, long t_max) {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    SigmaQTable table;
    table.coin = coin;
    table.qubit = qubit;
    table.values.resize(static_cast<std::size_t>(t_max) + 1);
    table.m1q.resize(static_cast<std::size_t>(t_max) + 1);
    table.values[0] = 0.0;
    table.m1q[0] = 0.0;
    WalkerState state = WalkerState::localized(0, qubit);
    for (long T = 1; T <= t_max; ++T) {
        state.step(coin);
        const Moments m = state.moments();
        table.values[static_cast<std::size_t>(T)] = m.variance;
        table.m1q[static_cast<std::size_t>(T)] = m.m1;
    }
    return table;
}

KEstimate estimate_k(const SigmaQTable& table) {
    const long t_max = table.t_max();
    if (t_max < 256) throw std::invalid_argument("table too short for k estimation");
    long T = 1;
    while (2 * T <= t_max) T *= 2;
    const auto ratio = [&](long n) {
        return table.values[static_cast<std::size_t>(n)] /
               (static_cast<double>(n) * static_cast<double>(n));
    };
    // Assume values[T]/T^2 = k + O(1/T); eliminate the 1/T term.
    const double r1 = ratio(T / 4);
    const double r2 = ratio(T / 2);
    const double r3 = ratio(T);
    const double k_hi = 2.0 * r3 - r2;
    const double k_lo = 2.0 * r2 - r1;
    return KEstimate{k_hi, std::abs(k_hi - k_lo) + std::abs(r3 - r2)};
}

Distribution convolve_master(const Distribution& dist, const Kernel& kernel) {
    Distribution out;
    out.origin = dist.origin - kernel.T;
    out.p.assign(dist.p.size() + static_cast<std::size_t>(2 * kernel.T), 0.0);
    for (std::size_t j = 0; j < dist.p.size(); ++j) {
        if (dist.p[j] == 0.0) continue;
        for (std::size_t i = 0; i < kernel.q.size(); ++i) {
            out.p[j + i] += kernel.q[i] * dist.p[j];
        }
    }
    return out;
}

std::vector<double> recurrence_trajectory(std::span<const long> intervals,
                                          const SigmaQTable& table,
                                          std::span<const long> checkpoints) {
    const long t_max = table.t_max();
    std::vector<double> out;
    out.reserve(checkpoints.size());
    std::size_t ci = 0;
    long t = 0;
    double acc = 0.0;
    const auto value_at = [&](long elapsed) {
        if (elapsed > t_max) throw std::invalid_argument("interval exceeds table range");
        return table.values[static_cast<std::size_t>(elapsed)];
    };
    for (const long T : intervals) {
        if (T > t_max) throw std::invalid_argument("interval exceeds table range");
        while (ci < checkpoints.size() && checkpoints[ci] <= t + T) {
            out.push_back(acc + value_at(checkpoints[ci] - t));
            ++ci;
        }
        t += T;
        acc += table.values[static_cast<std::size_t>(T)];
    }
    // Past the last measurement the walk is free.
    while (ci < checkpoints.size()) {
        out.push_back(acc + value_at(checkpoints[ci] - t));
        ++ci;
    }
    return out;
}

EnsembleStats oracle_ensemble(const WaitingTimeLaw& law, const SigmaQTable& table,
                              long trajectories, long t_max,
                              const std::vector<long>& checkpoints,
                              std::uint64_t master_seed, int workers,
                              ZeroIntervalPolicy policy) {
    validate(law);
    if (trajectories < 1) throw std::invalid_argument("trajectories must be >= 1");
    if (t_max > table.t_max()) throw std::invalid_argument("t_max exceeds table range");
    if (checkpoints.empty() || checkpoints.back() > t_max) {
        throw std::invalid_argument("checkpoints must lie in [1, t_max]");
    }

    const auto one_trajectory = [&](SplitMix64& rng, EnsembleAccumulator& acc) {
        std::size_t ci = 0;
        long t = 0;
        double var_acc = 0.0;
        double m1_acc = 0.0;
        const auto record_upto = [&](long boundary) {
            while (ci < checkpoints.size() && checkpoints[ci] <= boundary) {
                const std::size_t e = static_cast<std::size_t>(checkpoints[ci] - t);
                const double var = var_acc + table.values[e];
                const double m1 = m1_acc + table.m1q[e];
                acc.record(ci, m1, var + m1 * m1, std::sqrt(std::max(0.0, var)));
                ++ci;
            }
        };
        while (t < t_max) {
            const long drawn = sample_interval(law, rng, policy);
            const long seg = std::min(drawn, t_max - t);
            record_upto(t + seg);
            t += seg;
            var_acc += table.values[static_cast<std::size_t>(seg)];
            m1_acc += table.m1q[static_cast<std::size_t>(seg)];
        }
    };

    int nworkers = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    if (nworkers < 1) nworkers = 1;
    nworkers = static_cast<int>(std::min<long>(nworkers, trajectories));

    std::vector<EnsembleAccumulator> shards(static_cast<std::size_t>(nworkers),
                                            EnsembleAccumulator(checkpoints));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    const long per = trajectories / nworkers;
    const long extra = trajectories % nworkers;
    long start = 0;
    for (int w = 0; w < nworkers; ++w) {
        const long n = per + (w < extra ? 1 : 0);
        pool.emplace_back([&, w, start, n] {
            EnsembleAccumulator& acc = shards[static_cast<std::size_t>(w)];
            for (long i = 0; i < n; ++i) {
                SplitMix64 rng = stream_for(master_seed, static_cast<std::uint64_t>(start + i));
                one_trajectory(rng, acc);
            }
        });
        start += n;
    }
    for (auto& th : pool) th.join();

    EnsembleAccumulator total = std::move(shards.front());
    for (std::size_t w = 1; w < shards.size(); ++w) {
        total.merge(shards[w]);
    }
    return finalize(total);
}

} // namespace levywalk
