#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "levywalk/io.hpp"

using namespace levywalk;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "levywalk_io_test";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("stats CSV round trip preserves rows and header") {
    TempDir tmp;
    EnsembleStats stats;
    stats.rows.push_back({10, 1.5, 2.25, 3.125, 1000});
    stats.rows.push_back({100, 4.0, 5.5, 6.0625, 1000});
    const std::string path = tmp.file("stats.csv");
    write_stats_csv(path, stats);

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == kCsvHeader);

    const EnsembleStats back = read_stats_csv(path);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].t == 10);
    CHECK(back.rows[0].ensemble_sigma == doctest::Approx(3.125).epsilon(1e-15));
    CHECK(back.rows[1].count == 1000);
}

TEST_CASE("malformed CSV reports the offending row") {
    TempDir tmp;
    const std::string path = tmp.file("bad.csv");
    {
        std::ofstream out(path);
        out << kCsvHeader << "\n";
        out << "10,1.0,1.0,1.0,5\n";
        out << "garbage row\n";
    }
    CHECK_THROWS_WITH_AS(read_stats_csv(path), doctest::Contains("row 3"),
                         std::runtime_error);
}

TEST_CASE("missing header is rejected") {
    TempDir tmp;
    const std::string path = tmp.file("noheader.csv");
    {
        std::ofstream out(path);
        out << "1,2,3,4,5\n";
    }
    CHECK_THROWS_AS(read_stats_csv(path), std::runtime_error);
}

TEST_CASE("manifest sidecar round trip") {
    TempDir tmp;
    const std::string csv = tmp.file("out.csv");
    RunManifest m;
    m.fields["engine"] = "oracle";
    m.fields["alpha"] = 1.5;
    m.fields["seed"] = 42;
    m.write(csv);
    CHECK(std::filesystem::exists(RunManifest::sidecar_path(csv)));
    const RunManifest back = RunManifest::read_for(csv);
    CHECK(back.fields.at("engine") == "oracle");
    CHECK(back.fields.at("alpha").get<double>() == doctest::Approx(1.5));
}

TEST_CASE("checkpoint spec parsing") {
    const auto log = parse_checkpoints("log", 1000);
    CHECK(log.front() == 1);
    CHECK(log.back() == 1000);

    const auto all = parse_checkpoints("all", 5);
    CHECK(all == std::vector<long>{1, 2, 3, 4, 5});

    const auto list = parse_checkpoints("list:1,10,100", 1000);
    CHECK(list == std::vector<long>{1, 10, 100});

    CHECK_THROWS_AS(parse_checkpoints("list:5,5", 10), std::invalid_argument);
    CHECK_THROWS_AS(parse_checkpoints("bogus", 10), std::invalid_argument);
}

TEST_CASE("KS distance of a perfect grid against the identity CDF is small") {
    std::vector<double> samples;
    const int n = 1000;
    for (int i = 0; i < n; ++i) samples.push_back((i + 0.5) / n);
    const double d = ks_distance(std::move(samples), [](double x) { return x; });
    CHECK(d <= 0.5 / n + 1e-12);
}

TEST_CASE("gnuplot script references the CSV") {
    TempDir tmp;
    const std::string gp = tmp.file("plot.gp");
    write_gnuplot_script(gp, "data.csv");
    std::ifstream in(gp);
    std::string contents((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    CHECK(contents.find("data.csv") != std::string::npos);
    CHECK(contents.find("logscale") != std::string::npos);
}
