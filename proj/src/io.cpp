#include "levywalk/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levywalk {

void write_stats_csv(const std::string& path, const EnsembleStats& stats) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << kCsvHeader << "\n";
    out.precision(17);
    for (const StatsRow& row : stats.rows) {
        out << row.t << ',' << row.mean_sigma << ',' << row.rms_sigma << ','
            << row.ensemble_sigma << ',' << row.count << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

EnsembleStats read_stats_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error(path + ": row 1: expected header '" +
                                 std::string(kCsvHeader) + "'");
    }
    EnsembleStats stats;
    long row_no = 1;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        StatsRow row{};
        char c1, c2, c3, c4;
        if (!(ss >> row.t >> c1 >> row.mean_sigma >> c2 >> row.rms_sigma >> c3 >>
              row.ensemble_sigma >> c4 >> row.count) ||
            c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',') {
            throw std::runtime_error(path + ": row " + std::to_string(row_no) +
                                     ": malformed record");
        }
        stats.rows.push_back(row);
    }
    return stats;
}

std::string RunManifest::sidecar_path(const std::string& output_path) {
    return output_path + ".manifest.json";
}

void RunManifest::write(const std::string& output_path) const {
    const std::string path = sidecar_path(output_path);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << fields.dump(2) << "\n";
}

RunManifest RunManifest::read_for(const std::string& output_path) {
    const std::string path = sidecar_path(output_path);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    RunManifest m;
    in >> m.fields;
    return m;
}

std::vector<long> parse_checkpoints(const std::string& spec, long t_max) {
    if (spec == "log") {
        return log_checkpoints(t_max);
    }
    if (spec == "all") {
        std::vector<long> all(static_cast<std::size_t>(t_max));
        for (long t = 1; t <= t_max; ++t) all[static_cast<std::size_t>(t - 1)] = t;
        return all;
    }
    if (spec.rfind("list:", 0) == 0) {
        std::vector<long> out;
        std::istringstream ss(spec.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(std::stol(item));
        }
        if (out.empty()) throw std::invalid_argument("empty checkpoint list");
        if (!std::is_sorted(out.begin(), out.end()) ||
            std::adjacent_find(out.begin(), out.end()) != out.end()) {
            throw std::invalid_argument("checkpoint list must be strictly increasing");
        }
        return out;
    }
    throw std::invalid_argument("bad --checkpoints spec: " + spec);
}

void write_gnuplot_script(const std::string& script_path, const std::string& csv_path) {
    std::ofstream out(script_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + script_path);
    out << "set datafile separator ','\n"
        << "set logscale xy\n"
        << "set xlabel 't'\n"
        << "set ylabel 'sigma'\n"
        << "plot '" << csv_path << "' using 1:4 skip 1 with linespoints title 'ensemble sigma'\n";
}

} // namespace levywalk
