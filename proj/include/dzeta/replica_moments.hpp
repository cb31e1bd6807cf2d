#pragma once

#include <string>
#include <vector>

#include "dzeta/disorder.hpp"
#include "dzeta/model.hpp"

namespace dzeta {

struct MomentValue {
  double log_value;  // ln E[Z^k]
  double error;      // estimated absolute error on the log value
};

struct MomentTable {
  int k_max = 0;
  std::vector<double> log_moments;      // entry k-1 holds ln E[Z^k]
  std::vector<double> error_estimates;  // same indexing
};

// Constants of the geometric growth bound E[Z^k] <= alpha * beta^k:
// alpha = 1 and beta = exp(c_lambda * r^{4/3}) * sqrt(2*pi/m0_sq) with
// c_lambda = (3/4) (3!/lambda)^{1/3}.
struct MomentBoundConstants {
  double alpha;
  double beta;
  double c_lambda;
};

struct MomentGrowthRow {
  int k;
  double log_moment;
  double error;         // quadrature error estimate on log_moment
  double log_bound;     // ln(alpha) + k*ln(beta), m0_sq convention
  double log_bound_m0;  // variant with m0 in place of m0_sq in the Gaussian factor
  double margin;        // log_bound - log_moment
  bool pass;
};

struct MomentGrowthReport {
  bool ok = false;
  std::string error;  // non-empty when the bound constants are undefined
  double alpha = 0.0;
  double beta = 0.0;
  double beta_m0 = 0.0;
  std::vector<MomentGrowthRow> rows;
};

// ln E[Z(h)^k] in log domain: the maximum of k*ln Z(h) over the support is
// factored out before the expectation so the integrand stays in (0, 1].
MomentValue moment(const ModelParams& params, const DisorderDistribution& dist,
                   int k, const QuadratureConfig& cfg);

MomentTable moment_table(const ModelParams& params,
                         const DisorderDistribution& dist, int k_max,
                         const QuadratureConfig& cfg);

/// Throws std::domain_error when lambda == 0 (c_lambda diverges).
MomentBoundConstants moment_bound_constants(const ModelParams& params,
                                            const DisorderDistribution& dist);

// Checks ln E[Z^k] <= ln(alpha) + k*ln(beta) for k = 1..k_max with quadrature
// error margins. Failures (including undefined constants at lambda = 0) are
// carried in the report, never thrown.
MomentGrowthReport verify_moment_growth(const ModelParams& params,
                                        const DisorderDistribution& dist,
                                        int k_max, const QuadratureConfig& cfg);

/// Same check against an already computed table.
MomentGrowthReport verify_moment_growth(const ModelParams& params,
                                        const DisorderDistribution& dist,
                                        const MomentTable& table);

namespace detail {

/// Maximum of ln Z(h) over the support of the disorder.
double max_log_partition(const ModelParams& params,
                         const DisorderDistribution& dist,
                         const QuadratureConfig& cfg);

/// moment() with an explicit shift instead of the automatic maximum.
MomentValue moment_with_shift(const ModelParams& params,
                              const DisorderDistribution& dist, int k,
                              const QuadratureConfig& cfg, double shift);

}  // namespace detail

}  // namespace dzeta
