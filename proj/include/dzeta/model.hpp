#pragma once

#include "dzeta/numerics.hpp"

namespace dzeta {

/// Couplings of the quartic single-site action
///   S(phi) = (1/2) m0_sq phi^2 + (lambda/4!) phi^4.
struct ModelParams {
  double m0_sq = 1.0;
  double lambda = 1.0;

  void validate() const;  // m0_sq > 0, lambda >= 0
};

/// S(h, phi) = S(phi) + h*phi.
double action(const ModelParams& params, double phi, double h);

/// Unique minimizer of phi -> S(h, phi), by bisection-safeguarded Newton on
/// S' = m0_sq*phi + (lambda/6)*phi^3 + h.
double action_minimizer(const ModelParams& params, double h);

/// Z(h) = int dphi exp(-S(h, phi)). Use the log variant for large |h|.
double partition_function(const ModelParams& params, double h,
                          const QuadratureConfig& cfg);

// ln Z(h), evaluated as -S(phi*) + ln int exp(-(S - S(phi*))) with phi* the
// action minimizer, so large |h| never overflows.
double log_partition_function(const ModelParams& params, double h,
                              const QuadratureConfig& cfg);

}  // namespace dzeta
