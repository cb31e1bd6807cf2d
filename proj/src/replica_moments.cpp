#include "dzeta/replica_moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dzeta {

namespace detail {

double max_log_partition(const ModelParams& params,
                         const DisorderDistribution& dist,
                         const QuadratureConfig& cfg) {
  if (dist.is_atomic()) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [h, p] : dist.atoms()) {
      if (p > 0.0) {
        best = std::max(best, log_partition_function(params, h, cfg));
      }
    }
    return best;
  }
  // Z(h) is even and nondecreasing in |h|, so the support edge dominates.
  const double r = dist.support_radius();
  return std::max({log_partition_function(params, -r, cfg),
                   log_partition_function(params, 0.0, cfg),
                   log_partition_function(params, r, cfg)});
}

MomentValue moment_with_shift(const ModelParams& params,
                              const DisorderDistribution& dist, int k,
                              const QuadratureConfig& cfg, double shift) {
  if (k < 1) {
    throw std::invalid_argument("moment order k must be >= 1");
  }
  const auto integrand = [&](double h) {
    return std::exp(k * log_partition_function(params, h, cfg) - shift);
  };
  const QuadratureResult res = dist.expect_with_error(integrand, cfg);
  if (!res.converged) {
    throw ConvergenceError("moment quadrature did not converge (k = " +
                           std::to_string(k) + ")");
  }
  const double log_value = shift + std::log(res.value);
  // Outer quadrature error plus the inner log-partition tolerance per power.
  const double inner_tol = std::max(cfg.abs_tol, cfg.rel_tol);
  const double error = res.error_estimate / res.value + k * inner_tol;
  return MomentValue{log_value, error};
}

}  // namespace detail

MomentValue moment(const ModelParams& params, const DisorderDistribution& dist,
                   int k, const QuadratureConfig& cfg) {
  if (k < 1) {
    throw std::invalid_argument("moment order k must be >= 1");
  }
  const double shift = k * detail::max_log_partition(params, dist, cfg);
  return detail::moment_with_shift(params, dist, k, cfg, shift);
}

MomentTable moment_table(const ModelParams& params,
                         const DisorderDistribution& dist, int k_max,
                         const QuadratureConfig& cfg) {
  if (k_max < 1) {
    throw std::invalid_argument("moment_table requires k_max >= 1");
  }
  const double peak = detail::max_log_partition(params, dist, cfg);
  MomentTable table;
  table.k_max = k_max;
  table.log_moments.reserve(k_max);
  table.error_estimates.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const MomentValue mv =
        detail::moment_with_shift(params, dist, k, cfg, k * peak);
    table.log_moments.push_back(mv.log_value);
    table.error_estimates.push_back(mv.error);
  }
  return table;
}

MomentBoundConstants moment_bound_constants(const ModelParams& params,
                                            const DisorderDistribution& dist) {
  params.validate();
  if (!(params.lambda > 0.0)) {
    throw std::domain_error(
        "moment growth constants require lambda > 0 (c_lambda diverges at "
        "lambda = 0)");
  }
  const double c_lambda = 0.75 * std::cbrt(6.0 / params.lambda);
  const double r = dist.support_radius();
  const double beta = std::exp(c_lambda * std::pow(r, 4.0 / 3.0)) *
                      std::sqrt(2.0 * M_PI / params.m0_sq);
  return MomentBoundConstants{1.0, beta, c_lambda};
}

MomentGrowthReport verify_moment_growth(const ModelParams& params,
                                        const DisorderDistribution& dist,
                                        const MomentTable& table) {
  MomentGrowthReport report;
  MomentBoundConstants bc{};
  try {
    bc = moment_bound_constants(params, dist);
  } catch (const std::domain_error& e) {
    report.error = e.what();
    return report;
  }
  report.alpha = bc.alpha;
  report.beta = bc.beta;
  // Alternative reading of the Gaussian factor with m0 in place of m0_sq.
  const double r = dist.support_radius();
  report.beta_m0 = std::exp(bc.c_lambda * std::pow(r, 4.0 / 3.0)) *
                   std::sqrt(2.0 * M_PI / std::sqrt(params.m0_sq));

  const double log_alpha = std::log(bc.alpha);
  const double log_beta = std::log(bc.beta);
  const double log_beta_m0 = std::log(report.beta_m0);

  report.ok = true;
  report.rows.reserve(table.k_max);
  for (int k = 1; k <= table.k_max; ++k) {
    MomentGrowthRow row;
    row.k = k;
    row.log_moment = table.log_moments[k - 1];
    row.error = table.error_estimates[k - 1];
    row.log_bound = log_alpha + k * log_beta;
    row.log_bound_m0 = log_alpha + k * log_beta_m0;
    row.margin = row.log_bound - row.log_moment;
    const double slack = 2.0 * row.error + 1e-12;
    row.pass = row.log_moment <= row.log_bound + slack;
    report.ok = report.ok && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

MomentGrowthReport verify_moment_growth(const ModelParams& params,
                                        const DisorderDistribution& dist,
                                        int k_max, const QuadratureConfig& cfg) {
  try {
    moment_bound_constants(params, dist);
  } catch (const std::domain_error& e) {
    MomentGrowthReport report;
    report.error = e.what();
    return report;
  }
  return verify_moment_growth(params, dist,
                              moment_table(params, dist, k_max, cfg));
}

}  // namespace dzeta
