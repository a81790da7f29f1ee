// pybind11 bindings exposing the main operations: walk evolution and
// measurement, waiting-time sampling, both ensemble engines and the
// exponent analysis.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levywalk/analysis.hpp"
#include "levywalk/engine.hpp"
#include "levywalk/oracle.hpp"

namespace py = pybind11;
using namespace levywalk;
using namespace pybind11::literals;

namespace {

WaitingTimeLaw law_from_args(const std::string& law, double alpha, long period,
                             double mean, double stddev) {
    if (law == "levy") return LevyLaw{alpha};
    if (law == "fixed") return FixedLaw{period};
    if (law == "gauss") return GaussianLaw{mean, stddev};
    throw std::invalid_argument("law must be levy, fixed or gauss");
}

py::list stats_to_rows(const EnsembleStats& stats) {
    py::list rows;
    for (const StatsRow& row : stats.rows) {
        rows.append(py::dict("t"_a = row.t, "mean_sigma"_a = row.mean_sigma,
                             "rms_sigma"_a = row.rms_sigma,
                             "ensemble_sigma"_a = row.ensemble_sigma,
                             "count"_a = row.count));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum walk under Levy-timed projective measurements";

    py::class_<SplitMix64>(m, "Rng")
        .def(py::init<std::uint64_t>(), "seed"_a)
        .def("uniform", &SplitMix64::uniform);

    py::class_<QubitAmplitudes>(m, "QubitAmplitudes")
        .def(py::init<cxd, cxd>(), "left"_a, "right"_a)
        .def_readonly("left", &QubitAmplitudes::left)
        .def_readonly("right", &QubitAmplitudes::right);

    m.def("sigma_y_eigenstate", &sigma_y_eigenstate, "sign"_a);

    py::class_<CollapseOutcome>(m, "CollapseOutcome")
        .def_readonly("site", &CollapseOutcome::site)
        .def_readonly("chirality_sign", &CollapseOutcome::chirality_sign)
        .def_readonly("probability", &CollapseOutcome::probability);

    py::class_<WalkerState>(m, "WalkerState")
        .def_static(
            "localized",
            [](long site, const QubitAmplitudes& q) {
                return WalkerState::localized(site, q);
            },
            "site"_a, "qubit"_a)
        .def("step", [](WalkerState& s, double theta) { s.step(CoinAngle{theta}); },
             "theta"_a = hadamard_coin().theta)
        .def("evolve",
             [](WalkerState& s, long steps, double theta) {
                 s.evolve(CoinAngle{theta}, steps);
             },
             "steps"_a, "theta"_a = hadamard_coin().theta)
        .def("position_distribution", &WalkerState::position_distribution)
        .def("moments",
             [](const WalkerState& s) {
                 const Moments mo = s.moments();
                 return py::make_tuple(mo.m1, mo.m2, mo.variance);
             })
        .def("norm_sq", &WalkerState::norm_sq)
        .def("collapse_measure", &WalkerState::collapse_measure, "rng"_a)
        .def_property_readonly("time", &WalkerState::time);

    m.def("levy_cdf", &levy_cdf, "alpha"_a, "t"_a);
    m.def("levy_inverse_cdf", &levy_inverse_cdf, "alpha"_a, "u"_a);
    m.def(
        "sample_interval",
        [](const std::string& law, SplitMix64& rng, double alpha, long period, double mean,
           double stddev) {
            return sample_interval(law_from_args(law, alpha, period, mean, stddev), rng);
        },
        "law"_a, "rng"_a, "alpha"_a = 1.0, "period"_a = 1, "mean"_a = 10.0,
        "stddev"_a = 2.0);

    m.def(
        "run_ensemble",
        [](const std::string& law, double alpha, long period, long trajectories, long t_max,
           std::uint64_t seed, double theta, int workers,
           std::optional<std::vector<long>> checkpoints) {
            SimConfig cfg;
            cfg.law = law_from_args(law, alpha, period, 10.0, 2.0);
            cfg.coin = CoinAngle{theta};
            cfg.trajectories = trajectories;
            cfg.t_max = t_max;
            cfg.checkpoints = checkpoints ? *checkpoints : log_checkpoints(t_max);
            cfg.master_seed = seed;
            cfg.workers = workers;
            return stats_to_rows(run_ensemble(cfg));
        },
        "law"_a, "alpha"_a = 1.0, "period"_a = 1, "trajectories"_a = 1000,
        "t_max"_a = 1000, "seed"_a = 0, "theta"_a = hadamard_coin().theta,
        "workers"_a = 0, "checkpoints"_a = py::none());

    py::class_<SigmaQTable>(m, "SigmaQTable")
        .def_readonly("values", &SigmaQTable::values)
        .def_readonly("m1q", &SigmaQTable::m1q)
        .def_property_readonly("t_max", &SigmaQTable::t_max);

    m.def(
        "build_sigma_q_table",
        [](long t_max, double theta) {
            return build_sigma_q_table(CoinAngle{theta}, sigma_y_eigenstate(+1), t_max);
        },
        "t_max"_a, "theta"_a = hadamard_coin().theta);

    m.def("estimate_k", [](const SigmaQTable& table) {
        const KEstimate est = estimate_k(table);
        return py::make_tuple(est.k, est.spread);
    });

    m.def(
        "oracle_ensemble",
        [](const std::string& law, const SigmaQTable& table, double alpha, long period,
           long trajectories, long t_max, std::uint64_t seed, int workers,
           std::optional<std::vector<long>> checkpoints) {
            return stats_to_rows(oracle_ensemble(
                law_from_args(law, alpha, period, 10.0, 2.0), table, trajectories, t_max,
                checkpoints ? *checkpoints : log_checkpoints(t_max), seed, workers));
        },
        "law"_a, "table"_a, "alpha"_a = 1.0, "period"_a = 1, "trajectories"_a = 10000,
        "t_max"_a = 1000, "seed"_a = 0, "workers"_a = 0, "checkpoints"_a = py::none());

    m.def("analytic_exponent_asymptotic", &analytic_exponent_asymptotic, "alpha"_a);
    m.def(
        "analytic_exponent_finite",
        [](double alpha, double t, bool closed_form) {
            return analytic_exponent_finite(
                alpha, t, closed_form ? MomentMethod::ClosedForm : MomentMethod::Numeric);
        },
        "alpha"_a, "t"_a, "closed_form"_a = false);
    m.def("truncated_moments",
          [](double alpha, double t, bool closed_form) {
              const MomentPair p = closed_form ? closed_form_truncated_moments(alpha, t)
                                              : numeric_truncated_moments(alpha, t);
              return py::make_tuple(p.first, p.second);
          },
          "alpha"_a, "t"_a, "closed_form"_a = false);

    m.def(
        "fit_power_law",
        [](const std::vector<std::pair<double, double>>& series, long t_lo, long t_hi) {
            const FitResult fit = fit_power_law(series, t_lo, t_hi);
            return py::dict("exponent_c"_a = fit.exponent_c, "stderr"_a = fit.stderr_c,
                            "r_squared"_a = fit.r_squared, "t_lo"_a = fit.t_lo,
                            "t_hi"_a = fit.t_hi, "points_used"_a = fit.points_used);
        },
        "series"_a, "t_lo"_a, "t_hi"_a);
}
