#pragma once

#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "dzeta/numerics.hpp"

namespace dzeta {

// Compact-support probability measure for the disorder field h: a uniform
// interval, a Gaussian truncated and renormalized to [-r, r] (the sigma
// parameter is the variance), or a finite list of weighted atoms.
// Distributions are immutable after construction.
class DisorderDistribution {
 public:
  enum class Family { Uniform, TruncatedGaussian, FiniteAtoms };

  static DisorderDistribution uniform(double radius);
  static DisorderDistribution truncated_gaussian(double sigma, double radius);
  static DisorderDistribution finite_atoms(
      std::vector<std::pair<double, double>> atoms);

  Family family() const;
  double support_radius() const;
  bool is_atomic() const { return family() == Family::FiniteAtoms; }
  /// True when the measure is a single atom (zero-width support).
  bool is_degenerate() const;

  /// Atom list (FiniteAtoms only).
  const std::vector<std::pair<double, double>>& atoms() const;

  /// Normalized density at h (continuous families only).
  double density(double h) const;

  /// E_mu[g(h)]; exact weighted sum for atoms, quadrature otherwise.
  double expect(const RealFn& g, const QuadratureConfig& cfg) const;
  QuadratureResult expect_with_error(const RealFn& g,
                                     const QuadratureConfig& cfg) const;

  // One draw from the measure; inverse transform for the uniform family,
  // cumulative lookup for atoms, rejection from a uniform proposal for the
  // truncated Gaussian. Uniform deviates are (x >> 11) * 2^-53 of the raw
  // 64-bit output, so results are reproducible bit-for-bit per stream.
  double sample(std::mt19937_64& rng) const;

 private:
  struct UniformInterval {
    double radius;
  };
  struct TruncatedGaussianDist {
    double sigma;
    double radius;
    double norm;  // int_{-r}^{r} exp(-h^2/(2 sigma)) dh, cached
  };
  struct FiniteAtomsDist {
    std::vector<std::pair<double, double>> points;
    std::vector<double> cumulative;
    double radius;
  };

  using Variant =
      std::variant<UniformInterval, TruncatedGaussianDist, FiniteAtomsDist>;

  explicit DisorderDistribution(Variant v) : dist_(std::move(v)) {}

  Variant dist_;
};

}  // namespace dzeta
