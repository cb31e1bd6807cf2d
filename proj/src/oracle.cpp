#include "dzeta/oracle.hpp"

#include <cmath>
#include <random>

namespace dzeta {

void McConfig::validate() const {
  if (n_samples < 1) {
    throw std::invalid_argument("mc.n_samples must be >= 1");
  }
}

double quenched_direct(const ModelParams& params,
                       const DisorderDistribution& dist,
                       const QuadratureConfig& cfg) {
  params.validate();
  return dist.expect(
      [&](double h) { return log_partition_function(params, h, cfg); }, cfg);
}

McEstimate quenched_mc(const ModelParams& params,
                       const DisorderDistribution& dist, const McConfig& mc,
                       const QuadratureConfig& cfg) {
  params.validate();
  mc.validate();
  std::mt19937_64 rng(mc.seed);

  // Welford running mean and squared deviation.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < mc.n_samples; ++i) {
    const double h = dist.sample(rng);
    const double value = log_partition_function(params, h, cfg);
    const double delta = value - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (value - mean);
  }
  const double n = static_cast<double>(mc.n_samples);
  const double std_error =
      mc.n_samples > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
  return McEstimate{mean, std_error};
}

}  // namespace dzeta
