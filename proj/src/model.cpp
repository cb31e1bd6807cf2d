#include "dzeta/model.hpp"

#include <algorithm>
#include <cmath>

namespace dzeta {

void ModelParams::validate() const {
  if (!(m0_sq > 0.0) || !std::isfinite(m0_sq)) {
    throw std::invalid_argument("model.m0_sq must be finite and > 0");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("model.lambda must be finite and >= 0");
  }
}

double action(const ModelParams& params, double phi, double h) {
  const double phi2 = phi * phi;
  return 0.5 * params.m0_sq * phi2 + (params.lambda / 24.0) * phi2 * phi2 +
         h * phi;
}

double action_minimizer(const ModelParams& params, double h) {
  params.validate();
  if (h == 0.0) return 0.0;

  // S'(phi) is strictly increasing, so the root is unique.
  const auto grad = [&](double phi) {
    return params.m0_sq * phi + (params.lambda / 6.0) * phi * phi * phi + h;
  };
  const auto curv = [&](double phi) {
    return params.m0_sq + 0.5 * params.lambda * phi * phi;
  };

  // Bracket the root; start from the quadratic-only solution.
  double hi = std::abs(h) / params.m0_sq + 1.0;
  if (params.lambda > 0.0) {
    hi = std::min(hi, std::cbrt(6.0 * std::abs(h) / params.lambda) + 1.0);
  }
  double lo = -hi;
  while (grad(lo) > 0.0) lo *= 2.0;
  while (grad(hi) < 0.0) hi *= 2.0;

  double x = std::clamp(-h / params.m0_sq, lo, hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double g = grad(x);
    if (g > 0.0) {
      hi = x;
    } else if (g < 0.0) {
      lo = x;
    } else {
      return x;
    }
    double next = x - g / curv(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * (1.0 + std::abs(next))) {
      return next;
    }
    x = next;
  }
  return x;
}

double log_partition_function(const ModelParams& params, double h,
                              const QuadratureConfig& cfg) {
  params.validate();
  const double phi_star = action_minimizer(params, h);
  const double s_min = action(params, phi_star, h);
  const auto shifted = [&](double phi) {
    return std::exp(-(action(params, phi, h) - s_min));
  };
  const QuadratureResult res = integrate_real_line(shifted, phi_star, cfg);
  if (!res.converged) {
    throw ConvergenceError(
        "partition function quadrature did not converge within " +
        std::to_string(cfg.max_subdivisions) + " subdivisions (h = " +
        std::to_string(h) + ")");
  }
  return -s_min + std::log(res.value);
}

double partition_function(const ModelParams& params, double h,
                          const QuadratureConfig& cfg) {
  return std::exp(log_partition_function(params, h, cfg));
}

}  // namespace dzeta
