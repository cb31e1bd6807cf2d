#pragma once

#include <complex>
#include <optional>

#include "dzeta/replica_moments.hpp"

namespace dzeta {

struct SeriesConfig {
  double a = 1.0;  // split point of the Mellin t-integral
  int k_max = 60;
  double term_tol = 1e-12;

  void validate() const;
};

// Assembled quenched free energy
//   total = sum_{k=1}^{k_used} (-1)^{k+1} a^k E[Z^k]/(k!k) - (ln a + gamma) + R(a),
// with R(a) = -E[E1(a Z(h))] and |R(a)| <= exp(-Z(0)a)/(Z(0)a).
// `total` is the disorder average of ln Z(h); no extra sign is applied.
struct FreeEnergyReport {
  double a = 1.0;
  double series_partial = 0.0;
  int k_used = 0;
  double correction = 0.0;  // -(ln a + gamma)
  double remainder_value = 0.0;
  double remainder_bound = 0.0;
  double total = 0.0;
  // Magnitude of the first omitted term; valid as a truncation bound only
  // when the computed terms were decreasing, which series_converged records.
  double tail_bound = 0.0;
  // Accumulated quadrature error of the summed terms: sum_k |t_k| * err_k
  // with err_k the log-moment error estimate.
  double series_error = 0.0;
  bool series_converged = true;
  // Set when a * max_h Z(h) > 30: alternating-series cancellation starts to
  // cost more digits than compensated summation recovers. Reduce a.
  bool cancellation_warning = false;
  std::optional<double> oracle_value;
  std::optional<double> discrepancy;  // total - oracle_value
};

// Phi(s) = E_mu[Z(h)^{-s}] for Re(s) >= 0; real and imaginary parts are two
// real quadratures over the support. s = -1 is the one admitted negative
// point (it equals E[Z], the annealed route); any other Re(s) < 0 throws.
std::complex<double> phi(std::complex<double> s, const ModelParams& params,
                         const DisorderDistribution& dist,
                         const QuadratureConfig& cfg);

/// -ln E[Z], via the k = 1 log-moment.
double annealed_value(const ModelParams& params,
                      const DisorderDistribution& dist,
                      const QuadratureConfig& cfg);

// Term k of the moment series: (-1)^{k+1} exp(k ln a + ln E[Z^k] - ln k! - ln k).
// Throws std::overflow_error when the exponent exceeds double range, which
// signals that a must be reduced.
double series_term(int k, double a, double log_moment_k);

/// R(a) = -E_mu[E1(a Z(h))], a > 0.
double remainder(double a, const ModelParams& params,
                 const DisorderDistribution& dist, const QuadratureConfig& cfg);

/// exp(-Z(0) a) / (Z(0) a).
double remainder_bound(double a, const ModelParams& params,
                       const QuadratureConfig& cfg);

FreeEnergyReport quenched_free_energy(const ModelParams& params,
                                      const DisorderDistribution& dist,
                                      const SeriesConfig& series_cfg,
                                      const QuadratureConfig& cfg,
                                      bool attach_oracle = false);

struct PhiSplit {
  double phi1;  // [0, a] part of the Mellin t-integral, divided by Gamma(s)
  double phi2;  // [a, inf) part, divided by Gamma(s)
};

/// Split Phi(s) = phi1 + phi2 at t = a, for real s > 0 and a > 0.
PhiSplit phi_split(double s, double a, const ModelParams& params,
                   const DisorderDistribution& dist,
                   const QuadratureConfig& cfg);

}  // namespace dzeta
