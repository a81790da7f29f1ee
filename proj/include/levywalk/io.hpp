// io.hpp
// CSV emission/parsing for sigma series, manifest sidecars and the
// Kolmogorov-Smirnov statistic used by the sampler diagnostics.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "levywalk/engine.hpp"

namespace levywalk {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCsvHeader = "t,mean_sigma,rms_sigma,ensemble_sigma,count";

void write_stats_csv(const std::string& path, const EnsembleStats& stats);

// Throws std::runtime_error naming the offending row on malformed input.
EnsembleStats read_stats_csv(const std::string& path);

// Sidecar written next to every output so any CSV is reproducible.
struct RunManifest {
    nlohmann::json fields;

    static std::string sidecar_path(const std::string& output_path);
    void write(const std::string& output_path) const;
    static RunManifest read_for(const std::string& output_path);
};

// One-sample KS distance of `samples` against a CDF given as a callable.
template <typename Cdf>
double ks_distance(std::vector<double> samples, Cdf&& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// Checkpoint spec: "log", "all", or "list:t1,t2,...".
std::vector<long> parse_checkpoints(const std::string& spec, long t_max);

// gnuplot script plotting ensemble_sigma from the CSV on log-log axes.
void write_gnuplot_script(const std::string& script_path, const std::string& csv_path);

} // namespace levywalk
