#pragma once

#include <cstdint>

#include "dzeta/disorder.hpp"
#include "dzeta/model.hpp"

namespace dzeta {

struct McConfig {
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 1;

  void validate() const;
};

struct McEstimate {
  double estimate;
  double std_error;
};

// E_mu[ln Z(h)] by nested quadrature, fully independent of the moment-series
// route; the ground truth every series result is checked against.
double quenched_direct(const ModelParams& params,
                       const DisorderDistribution& dist,
                       const QuadratureConfig& cfg);

// Sample mean of ln Z(h_i) over n_samples draws from a single mt19937_64
// stream seeded with mc.seed (samples consumed sequentially, no splitting).
// std_error is the Bessel-corrected sample deviation over sqrt(n).
// Bit-reproducible for a fixed seed.
McEstimate quenched_mc(const ModelParams& params,
                       const DisorderDistribution& dist, const McConfig& mc,
                       const QuadratureConfig& cfg);

}  // namespace dzeta
