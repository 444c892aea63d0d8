#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aoi/closed_form.hpp"
#include "aoi/distortion.hpp"
#include "aoi/errors.hpp"
#include "aoi/oracle.hpp"
#include "aoi/tradeoff.hpp"
#include "aoi/trajectory.hpp"

namespace py = pybind11;
using namespace aoi;

namespace {

ProblemInstance make_instance(double T, int N, const std::string& mode, double c, double alpha) {
  ProblemInstance inst;
  inst.T = T;
  inst.N = N;
  if (mode == "constant") {
    inst.mode = ConstantMode{c};
  } else if (mode == "inverse") {
    inst.mode = InverseAgeMode{alpha};
  } else if (mode == "proportional") {
    inst.mode = ProportionalAgeMode{c, alpha};
  } else {
    throw DomainError("unknown mode '" + mode + "' (constant, inverse, proportional)");
  }
  return inst;
}

py::dict regime_dict(const RegimeReport& r) {
  py::dict d;
  d["mode"] = std::string(to_string(r.mode));
  d["branch"] = std::string(to_string(r.branch));
  d["condition"] = r.condition;
  d["boundary_distances"] = r.boundary_distances;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Closed-form age-optimal schedules, a numerical oracle and age trajectories.";

  py::register_exception<Infeasible>(m, "Infeasible", PyExc_ValueError);
  py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

  py::enum_<DistortionKind>(m, "DistortionKind")
      .value("EXPONENTIAL", DistortionKind::Exponential)
      .value("INVERSE_LINEAR", DistortionKind::InverseLinear);

  py::class_<DistortionSpec>(m, "DistortionSpec")
      .def(py::init([](DistortionKind kind, double a, double b, double d, double c_max) {
             DistortionSpec s{kind, a, b, d, c_max};
             s.validate();
             return s;
           }),
           py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("d"), py::arg("c_max"))
      .def_readonly("kind", &DistortionSpec::kind)
      .def_readonly("a", &DistortionSpec::a)
      .def_readonly("b", &DistortionSpec::b)
      .def_readonly("d", &DistortionSpec::d)
      .def_readonly("c_max", &DistortionSpec::c_max);

  m.def("tradeoff_preset", &tradeoff_preset);
  m.def("unit_preset", &unit_preset);
  m.def("distortion_eval", &eval, py::arg("spec"), py::arg("c"));
  m.def("min_processing_for", &min_processing_for, py::arg("spec"), py::arg("beta"));

  py::class_<Schedule>(m, "Schedule")
      .def(py::init([](std::vector<double> y, std::vector<double> c) {
             Schedule s{std::move(y), std::move(c)};
             s.check_shape();
             return s;
           }),
           py::arg("y"), py::arg("c"))
      .def_readonly("y", &Schedule::y)
      .def_readonly("c", &Schedule::c)
      .def("__repr__", [](const Schedule& s) {
        return "Schedule(y=" + py::repr(py::cast(s.y)).cast<std::string>() +
               ", c=" + py::repr(py::cast(s.c)).cast<std::string>() + ")";
      });

  py::enum_<Branch>(m, "Branch")
      .value("CONSTANT_SPREAD", Branch::ConstantSpread)
      .value("CONSTANT_BACK_TO_BACK", Branch::ConstantBackToBack)
      .value("INVERSE_EQUALIZED", Branch::InverseEqualized)
      .value("INVERSE_CHAIN", Branch::InverseChain)
      .value("PROPORTIONAL_CHAIN", Branch::ProportionalChain)
      .value("PROPORTIONAL_EQUALIZED", Branch::ProportionalEqualized)
      .value("PROPORTIONAL_CAPPED", Branch::ProportionalCapped)
      .value("PROPORTIONAL_UNIFORM", Branch::ProportionalUniform);

  py::class_<Solution>(m, "Solution")
      .def_readonly("schedule", &Solution::schedule)
      .def_readonly("total_age", &Solution::total_age)
      .def_property_readonly("branch", [](const Solution& s) { return s.regime.branch; })
      .def_property_readonly("regime", [](const Solution& s) { return regime_dict(s.regime); });

  m.def("solve_constant", &solve_constant, py::arg("T"), py::arg("N"), py::arg("c_min"));
  m.def("solve_inverse_age", &solve_inverse_age, py::arg("T"), py::arg("N"), py::arg("alpha"));
  m.def("solve_proportional_age", &solve_proportional_age, py::arg("T"), py::arg("N"),
        py::arg("c"), py::arg("alpha"));
  m.def(
      "solve",
      [](double T, int N, const std::string& mode, double c, double alpha) {
        return solve(make_instance(T, N, mode, c, alpha));
      },
      py::arg("T"), py::arg("N"), py::arg("mode"), py::arg("c") = 0.0, py::arg("alpha") = 0.0);
  m.def(
      "proportional_bounds",
      [](int N, double c, double alpha) {
        const auto b = proportional_bounds(N, c, alpha);
        return py::make_tuple(b.b1, b.b2, b.b3);
      },
      py::arg("N"), py::arg("c"), py::arg("alpha"));

  m.def("total_age", &total_age, py::arg("schedule"));
  m.def(
      "check_feasibility",
      [](double T, int N, const std::string& mode, const Schedule& s, double c, double alpha,
         double tol) {
        const auto report = check_feasibility(make_instance(T, N, mode, c, alpha), s, tol);
        std::vector<std::pair<std::string, double>> out;
        for (const auto& v : report.violations) out.emplace_back(v.constraint, v.residual);
        return out;
      },
      py::arg("T"), py::arg("N"), py::arg("mode"), py::arg("schedule"), py::arg("c") = 0.0,
      py::arg("alpha") = 0.0, py::arg("tol") = 1e-9,
      "List of (constraint, residual) pairs; empty when the schedule is feasible.");

  py::class_<OracleConfig>(m, "OracleConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &OracleConfig::restarts)
      .def_readwrite("max_iterations", &OracleConfig::max_iterations)
      .def_readwrite("line_search_tol", &OracleConfig::line_search_tol)
      .def_readwrite("seed", &OracleConfig::seed);

  m.def(
      "oracle_solve",
      [](double T, int N, const std::string& mode, double c, double alpha,
         const OracleConfig& config) {
        const auto r = oracle_solve(make_instance(T, N, mode, c, alpha), config);
        py::dict d;
        d["schedule"] = r.schedule;
        d["objective"] = r.objective;
        d["best_restart"] = r.best_restart;
        d["sweeps"] = r.sweeps;
        d["trace"] = r.trace;
        return d;
      },
      py::arg("T"), py::arg("N"), py::arg("mode"), py::arg("c") = 0.0, py::arg("alpha") = 0.0,
      py::arg("config") = OracleConfig{});

  m.def(
      "trajectory",
      [](const Schedule& s, double step) {
        std::vector<std::pair<double, double>> out;
        for (const auto& row : sample(build(s), step)) out.emplace_back(row.t, row.age);
        return out;
      },
      py::arg("schedule"), py::arg("step"), "Sampled (t, age) pairs of the sawtooth.");
  m.def(
      "trajectory_integral", [](const Schedule& s) { return integrate(build(s)); },
      py::arg("schedule"));

  m.def(
      "sweep_tradeoff",
      [](const DistortionSpec& spec, double T, int N, double beta_lo, double beta_hi, int steps) {
        py::list out;
        for (const auto& row : sweep_tradeoff(spec, T, N, beta_lo, beta_hi, steps)) {
          py::dict d;
          d["beta"] = row.beta;
          d["c_min"] = row.c_min ? py::cast(*row.c_min) : py::none();
          d["total_age"] = row.solution ? py::cast(row.solution->total_age) : py::none();
          d["avg_age"] = row.solution ? py::cast(row.solution->total_age / T) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("spec"), py::arg("T"), py::arg("N"), py::arg("beta_lo"), py::arg("beta_hi"),
      py::arg("steps") = 50);
}
