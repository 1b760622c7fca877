#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adgibbs/counterexample.hpp"
#include "adgibbs/geometric.hpp"
#include "adgibbs/glmm.hpp"
#include "adgibbs/samplers.hpp"
#include "adgibbs/selection.hpp"
#include "adgibbs/theory.hpp"
#include "adgibbs/verify.hpp"

namespace py = pybind11;
using namespace adgibbs;

namespace {

std::vector<std::pair<std::pair<long, long>, double>> row_as_pairs(
    const std::vector<std::pair<StairState, double>>& row) {
  std::vector<std::pair<std::pair<long, long>, double>> out;
  out.reserve(row.size());
  for (const auto& [s, p] : row) out.push_back({{s.i, s.j}, p});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "adaptive random scan Gibbs samplers: exact kernels, "
            "ergodicity bounds and the transient counter-example";

  py::register_exception<Error>(m, "AdgibbsError");

  // selection probabilities
  py::class_<SelectionProbs>(m, "SelectionProbs")
      .def(py::init<>())
      .def_readwrite("probs", &SelectionProbs::probs)
      .def_readwrite("epsilon", &SelectionProbs::epsilon);
  m.def("validate_selection_probs", &validate_selection_probs, py::arg("probs"),
        py::arg("epsilon"));
  m.def("project_to_simplex", &project_to_simplex, py::arg("probs"),
        py::arg("epsilon"));
  m.def("sup_distance", &sup_distance);

  // closed-form ergodicity bounds
  py::class_<MinorizationCertificate>(m, "MinorizationCertificate")
      .def(py::init<>())
      .def_readwrite("m", &MinorizationCertificate::m)
      .def_readwrite("s", &MinorizationCertificate::s);
  m.def("tv_finite", &tv_finite);
  m.def("mixture_coefficient", &mixture_coefficient);
  m.def("kernel_lipschitz_bound", &kernel_lipschitz_bound);
  m.def("uniform_bound", &uniform_bound, py::arg("cert"), py::arg("epsilon"),
        py::arg("d"), py::arg("n"));
  m.def("strong_unif_upgrade", &strong_unif_upgrade, py::arg("m"), py::arg("s"));
  m.def("systematic_minorization", &systematic_minorization);
  m.def("drift_rate_r", &drift_rate_r);
  m.def("drift_exponent_select", &drift_exponent_select);

  // transient counter-example machinery
  py::class_<AdaptSpeed>(m, "AdaptSpeed")
      .def("a", &AdaptSpeed::a);
  py::class_<StairSchedule, AdaptSpeed>(m, "StairSchedule")
      .def(py::init<double>(), py::arg("b1") = 1000.0)
      .def("b", &StairSchedule::b)
      .def("c", &StairSchedule::c)
      .def("regime", &StairSchedule::regime);
  py::class_<LinearSpeed, AdaptSpeed>(m, "LinearSpeed")
      .def(py::init<double, double>(), py::arg("a0") = 10.0,
           py::arg("rate") = 1.0);
  m.def("stair_pi_weight",
        [](long i, long j) { return stair_pi_weight({i, j}); });
  m.def("stair_alpha",
        [](long i, long j, long n, const AdaptSpeed& schedule) {
          return stair_alpha({i, j}, n, schedule).probs;
        });
  m.def("stair_kernel_row",
        [](long i, long j, long n, const AdaptSpeed& schedule) {
          return row_as_pairs(stair_kernel_row({i, j}, n, schedule));
        });
  m.def("simulate_stair_final",
        [](long steps, std::uint64_t seed, std::uint64_t replica,
           const AdaptSpeed& schedule) {
          CounterRng rng = CounterRng::substream(seed, replica);
          std::pair<long, long> final_state{1, 1};
          simulate_stair_stream({1, 1}, steps, schedule, rng,
                                [&](const TraceRow& row) {
                                  final_state = {
                                      static_cast<long>(row.state.coords[0]),
                                      static_cast<long>(row.state.coords[1])};
                                });
          return final_state;
        },
        py::arg("steps"), py::arg("seed"), py::arg("replica"),
        py::arg("schedule"),
        "final (i, j) of the transient adaptive chain started at (1,1)");
  m.def("truncated_tv_curve",
        [](long M, const AdaptSpeed& schedule, const std::vector<long>& grid) {
          return truncated_tv_curve(M, {1, 1}, schedule, grid);
        });
  m.def("stair_row_dominates_walk",
        [](long i, long j, long n, const AdaptSpeed& schedule) {
          return stair_row_dominates_walk({i, j}, n, schedule);
        });
  m.def("hoeffding_tail", &hoeffding_tail);

  // vanishing proposal gaps with a non-vanishing kernel gap
  m.def("geometric_truncation", &geometric_truncation);
  m.def("geometric_qn_pmf", &geometric_qn_pmf);
  m.def("geometric_metropolis_row", &geometric_metropolis_row);
  m.def("geometric_q_gap", &geometric_q_gap);
  m.def("geometric_p_gap_lower", &geometric_p_gap_lower);

  // Poisson random-effects posterior
  py::class_<GlmmSummary>(m, "GlmmSummary")
      .def_readonly("theta_mean", &GlmmSummary::theta_mean)
      .def_readonly("theta_se", &GlmmSummary::theta_se)
      .def_readonly("accept_rates", &GlmmSummary::accept_rates)
      .def_readonly("gamma_final", &GlmmSummary::gamma_final)
      .def_readonly("strategy", &GlmmSummary::strategy);
  m.def("glmm_run",
        [](int n_obs, std::uint64_t data_seed, const std::string& strategy,
           long steps, long burnin, std::uint64_t seed) {
          GlmmStrategy s;
          if (strategy == "accept44") {
            s = GlmmStrategy::Accept44;
          } else if (strategy == "var24") {
            s = GlmmStrategy::Var24;
          } else if (strategy == "fixed") {
            s = GlmmStrategy::Fixed;
          } else {
            throw Error(ErrorKind::BadArgument, "unknown strategy");
          }
          GlmmRunOptions options;
          options.steps = steps;
          options.burnin = burnin;
          options.seed = seed;
          return glmm_run(make_synthetic_glmm(n_obs, data_seed), s, options);
        },
        py::arg("n_obs") = 5, py::arg("data_seed") = 42,
        py::arg("strategy") = "accept44", py::arg("steps") = 100000,
        py::arg("burnin") = 1000, py::arg("seed") = 1729);

  // bounds-vs-oracle property suite
  m.def("run_bound_suite",
        [](std::uint64_t seed, bool selftest_negate) {
          const BoundReport report = run_bound_suite(seed, selftest_negate);
          py::list checks;
          for (const BoundCheckResult& c : report.checks) {
            py::dict d;
            d["name"] = c.name;
            d["passed"] = c.passed;
            d["cases"] = c.cases;
            d["worst_ratio"] = c.worst_ratio;
            checks.append(d);
          }
          py::dict out;
          out["all_passed"] = report.all_passed();
          out["checks"] = checks;
          return out;
        },
        py::arg("seed") = 1729, py::arg("selftest_negate") = false);
}
