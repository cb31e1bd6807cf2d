#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dzeta/oracle.hpp"
#include "dzeta/zeta.hpp"

namespace py = pybind11;
using namespace dzeta;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Quenched average free energy of the zero-dimensional random-field "
      "phi^4 model: partition function, replica moments, moment-series free "
      "energy and brute-force cross-checks.";

  m.attr("EULER_GAMMA") = EULER_GAMMA;

  py::register_exception<ConvergenceError>(m, "ConvergenceError",
                                           PyExc_RuntimeError);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def(py::init([](double abs_tol, double rel_tol, int max_subdivisions,
                       double decay_cutoff) {
             QuadratureConfig cfg{abs_tol, rel_tol, max_subdivisions,
                                  decay_cutoff};
             cfg.validate();
             return cfg;
           }),
           py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-10,
           py::arg("max_subdivisions") = 2000,
           py::arg("decay_cutoff") = 1e-18)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("max_subdivisions", &QuadratureConfig::max_subdivisions)
      .def_readwrite("decay_cutoff", &QuadratureConfig::decay_cutoff);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("error_estimate", &QuadratureResult::error_estimate)
      .def_readonly("subdivisions_used", &QuadratureResult::subdivisions_used)
      .def_readonly("converged", &QuadratureResult::converged)
      .def("__repr__", [](const QuadratureResult& r) {
        return "QuadratureResult(value=" + std::to_string(r.value) +
               ", error_estimate=" + std::to_string(r.error_estimate) + ")";
      });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double m0_sq, double lambda) {
             ModelParams p{m0_sq, lambda};
             p.validate();
             return p;
           }),
           py::arg("m0_sq") = 1.0, py::arg("lambda_") = 1.0)
      .def_readwrite("m0_sq", &ModelParams::m0_sq)
      .def_readwrite("lambda_", &ModelParams::lambda);

  py::class_<DisorderDistribution>(m, "DisorderDistribution")
      .def_static("uniform", &DisorderDistribution::uniform, py::arg("radius"))
      .def_static("truncated_gaussian",
                  &DisorderDistribution::truncated_gaussian, py::arg("sigma"),
                  py::arg("radius"))
      .def_static("finite_atoms", &DisorderDistribution::finite_atoms,
                  py::arg("atoms"))
      .def_property_readonly("support_radius",
                             &DisorderDistribution::support_radius)
      .def_property_readonly("is_atomic", &DisorderDistribution::is_atomic)
      .def_property_readonly("is_degenerate",
                             &DisorderDistribution::is_degenerate)
      .def("density", &DisorderDistribution::density, py::arg("h"))
      .def(
          "expect",
          [](const DisorderDistribution& d, const RealFn& g,
             const QuadratureConfig& cfg) { return d.expect(g, cfg); },
          py::arg("g"), py::arg("cfg") = QuadratureConfig{});

  py::class_<SeriesConfig>(m, "SeriesConfig")
      .def(py::init([](double a, int k_max, double term_tol) {
             SeriesConfig cfg{a, k_max, term_tol};
             cfg.validate();
             return cfg;
           }),
           py::arg("a") = 1.0, py::arg("k_max") = 60,
           py::arg("term_tol") = 1e-12)
      .def_readwrite("a", &SeriesConfig::a)
      .def_readwrite("k_max", &SeriesConfig::k_max)
      .def_readwrite("term_tol", &SeriesConfig::term_tol);

  py::class_<McConfig>(m, "McConfig")
      .def(py::init([](std::int64_t n_samples, std::uint64_t seed) {
             McConfig cfg{n_samples, seed};
             cfg.validate();
             return cfg;
           }),
           py::arg("n_samples") = 100000, py::arg("seed") = 1)
      .def_readwrite("n_samples", &McConfig::n_samples)
      .def_readwrite("seed", &McConfig::seed);

  py::class_<FreeEnergyReport>(m, "FreeEnergyReport")
      .def_readonly("a", &FreeEnergyReport::a)
      .def_readonly("series_partial", &FreeEnergyReport::series_partial)
      .def_readonly("k_used", &FreeEnergyReport::k_used)
      .def_readonly("correction", &FreeEnergyReport::correction)
      .def_readonly("remainder_value", &FreeEnergyReport::remainder_value)
      .def_readonly("remainder_bound", &FreeEnergyReport::remainder_bound)
      .def_readonly("total", &FreeEnergyReport::total)
      .def_readonly("tail_bound", &FreeEnergyReport::tail_bound)
      .def_readonly("series_error", &FreeEnergyReport::series_error)
      .def_readonly("series_converged", &FreeEnergyReport::series_converged)
      .def_readonly("cancellation_warning",
                    &FreeEnergyReport::cancellation_warning)
      .def_readonly("oracle_value", &FreeEnergyReport::oracle_value)
      .def_readonly("discrepancy", &FreeEnergyReport::discrepancy)
      .def("__repr__", [](const FreeEnergyReport& r) {
        return "FreeEnergyReport(total=" + std::to_string(r.total) +
               ", k_used=" + std::to_string(r.k_used) + ")";
      });

  py::class_<MomentTable>(m, "MomentTable")
      .def_readonly("k_max", &MomentTable::k_max)
      .def_readonly("log_moments", &MomentTable::log_moments)
      .def_readonly("error_estimates", &MomentTable::error_estimates);

  py::class_<MomentGrowthRow>(m, "MomentGrowthRow")
      .def_readonly("k", &MomentGrowthRow::k)
      .def_readonly("log_moment", &MomentGrowthRow::log_moment)
      .def_readonly("error", &MomentGrowthRow::error)
      .def_readonly("log_bound", &MomentGrowthRow::log_bound)
      .def_readonly("log_bound_m0", &MomentGrowthRow::log_bound_m0)
      .def_readonly("margin", &MomentGrowthRow::margin)
      .def_readonly("pass_", &MomentGrowthRow::pass);

  py::class_<MomentGrowthReport>(m, "MomentGrowthReport")
      .def_readonly("ok", &MomentGrowthReport::ok)
      .def_readonly("error", &MomentGrowthReport::error)
      .def_readonly("alpha", &MomentGrowthReport::alpha)
      .def_readonly("beta", &MomentGrowthReport::beta)
      .def_readonly("beta_m0", &MomentGrowthReport::beta_m0)
      .def_readonly("rows", &MomentGrowthReport::rows);

  py::class_<PhiSplit>(m, "PhiSplit")
      .def_readonly("phi1", &PhiSplit::phi1)
      .def_readonly("phi2", &PhiSplit::phi2);

  py::class_<McEstimate>(m, "McEstimate")
      .def_readonly("estimate", &McEstimate::estimate)
      .def_readonly("std_error", &McEstimate::std_error);

  // numerics
  m.def("integrate_finite", &integrate_finite, py::arg("f"), py::arg("lo"),
        py::arg("hi"), py::arg("cfg") = QuadratureConfig{});
  m.def("integrate_real_line", &integrate_real_line, py::arg("f"),
        py::arg("center"), py::arg("cfg") = QuadratureConfig{});
  m.def("exp_integral_e1", &exp_integral_e1, py::arg("x"));
  m.def(
      "ein_series",
      [](double x, int k_max, double term_tol) {
        const EinSeriesResult r = ein_series(x, k_max, term_tol);
        return py::make_tuple(r.value, r.k_used);
      },
      py::arg("x"), py::arg("k_max") = 60, py::arg("term_tol") = 1e-12);
  m.def(
      "compensated_sum",
      [](const std::vector<double>& terms) {
        return compensated_sum(std::span<const double>(terms));
      },
      py::arg("terms"));

  // model
  m.def("action", &action, py::arg("params"), py::arg("phi"), py::arg("h"));
  m.def("partition_function", &partition_function, py::arg("params"),
        py::arg("h"), py::arg("cfg") = QuadratureConfig{});
  m.def("log_partition_function", &log_partition_function, py::arg("params"),
        py::arg("h"), py::arg("cfg") = QuadratureConfig{});

  // replica moments
  m.def(
      "moment",
      [](const ModelParams& p, const DisorderDistribution& d, int k,
         const QuadratureConfig& cfg) {
        const MomentValue mv = moment(p, d, k, cfg);
        return py::make_tuple(mv.log_value, mv.error);
      },
      py::arg("params"), py::arg("dist"), py::arg("k"),
      py::arg("cfg") = QuadratureConfig{});
  m.def("moment_table", &moment_table, py::arg("params"), py::arg("dist"),
        py::arg("k_max"), py::arg("cfg") = QuadratureConfig{});
  m.def(
      "moment_bound_constants",
      [](const ModelParams& p, const DisorderDistribution& d) {
        const MomentBoundConstants c = moment_bound_constants(p, d);
        return py::make_tuple(c.alpha, c.beta);
      },
      py::arg("params"), py::arg("dist"));
  m.def(
      "verify_moment_growth",
      [](const ModelParams& p, const DisorderDistribution& d, int k_max,
         const QuadratureConfig& cfg) {
        return verify_moment_growth(p, d, k_max, cfg);
      },
      py::arg("params"), py::arg("dist"), py::arg("k_max"),
      py::arg("cfg") = QuadratureConfig{});

  // disorder-averaged zeta function and series free energy
  m.def("phi", &phi, py::arg("s"), py::arg("params"), py::arg("dist"),
        py::arg("cfg") = QuadratureConfig{});
  m.def("annealed_value", &annealed_value, py::arg("params"), py::arg("dist"),
        py::arg("cfg") = QuadratureConfig{});
  m.def("series_term", &series_term, py::arg("k"), py::arg("a"),
        py::arg("log_moment_k"));
  m.def("remainder", &dzeta::remainder, py::arg("a"), py::arg("params"),
        py::arg("dist"), py::arg("cfg") = QuadratureConfig{});
  m.def("remainder_bound", &remainder_bound, py::arg("a"), py::arg("params"),
        py::arg("cfg") = QuadratureConfig{});
  m.def("quenched_free_energy", &quenched_free_energy, py::arg("params"),
        py::arg("dist"), py::arg("series") = SeriesConfig{},
        py::arg("cfg") = QuadratureConfig{}, py::arg("attach_oracle") = false);
  m.def("phi_split", &phi_split, py::arg("s"), py::arg("a"), py::arg("params"),
        py::arg("dist"), py::arg("cfg") = QuadratureConfig{});

  // brute-force cross-checks
  m.def("quenched_direct", &quenched_direct, py::arg("params"),
        py::arg("dist"), py::arg("cfg") = QuadratureConfig{});
  m.def("quenched_mc", &quenched_mc, py::arg("params"), py::arg("dist"),
        py::arg("mc") = McConfig{}, py::arg("cfg") = QuadratureConfig{});
}
