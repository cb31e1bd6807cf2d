#include "dzeta/disorder.hpp"

#include <algorithm>
#include <cmath>

namespace dzeta {

namespace {

double uniform_deviate(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_finite_radius(double radius) {
  if (!std::isfinite(radius) || !(radius > 0.0)) {
    throw std::invalid_argument(
        "disorder support radius must be finite and > 0: the moment growth "
        "bound and the series representation require compact support "
        "(a full-line Gaussian is not admissible; truncate it)");
  }
}

}  // namespace

DisorderDistribution DisorderDistribution::uniform(double radius) {
  require_finite_radius(radius);
  return DisorderDistribution(UniformInterval{radius});
}

DisorderDistribution DisorderDistribution::truncated_gaussian(double sigma,
                                                              double radius) {
  require_finite_radius(radius);
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw std::invalid_argument("disorder sigma (variance) must be finite and > 0");
  }
  // Normalization by quadrature, computed once at construction.
  QuadratureConfig tight;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  const auto kernel = [sigma](double h) {
    return std::exp(-h * h / (2.0 * sigma));
  };
  const QuadratureResult norm = integrate_finite(kernel, -radius, radius, tight);
  return DisorderDistribution(TruncatedGaussianDist{sigma, radius, norm.value});
}

DisorderDistribution DisorderDistribution::finite_atoms(
    std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("disorder atoms list must be non-empty");
  }
  double radius = 0.0;
  detail::CompensatedAccumulator mass;
  for (const auto& [h, p] : atoms) {
    if (!std::isfinite(h)) {
      throw std::invalid_argument("disorder atom position must be finite");
    }
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("disorder atom weight must be >= 0");
    }
    radius = std::max(radius, std::abs(h));
    mass.add(p);
  }
  if (std::abs(mass.value() - 1.0) > 1e-15) {
    throw std::invalid_argument(
        "disorder atom weights must sum to 1 (within 1e-15); got " +
        std::to_string(mass.value()));
  }
  std::vector<double> cumulative;
  cumulative.reserve(atoms.size());
  double running = 0.0;
  for (const auto& [h, p] : atoms) {
    running += p;
    cumulative.push_back(running);
  }
  cumulative.back() = 1.0;
  return DisorderDistribution(
      FiniteAtomsDist{std::move(atoms), std::move(cumulative), radius});
}

DisorderDistribution::Family DisorderDistribution::family() const {
  if (std::holds_alternative<UniformInterval>(dist_)) return Family::Uniform;
  if (std::holds_alternative<TruncatedGaussianDist>(dist_)) {
    return Family::TruncatedGaussian;
  }
  return Family::FiniteAtoms;
}

double DisorderDistribution::support_radius() const {
  return std::visit([](const auto& d) { return d.radius; }, dist_);
}

bool DisorderDistribution::is_degenerate() const {
  if (const auto* a = std::get_if<FiniteAtomsDist>(&dist_)) {
    int live = 0;
    for (const auto& [h, p] : a->points) {
      if (p > 0.0) ++live;
    }
    return live <= 1;
  }
  return false;
}

const std::vector<std::pair<double, double>>& DisorderDistribution::atoms()
    const {
  const auto* a = std::get_if<FiniteAtomsDist>(&dist_);
  if (a == nullptr) {
    throw std::logic_error("atoms() is only defined for the atomic family");
  }
  return a->points;
}

double DisorderDistribution::density(double h) const {
  if (const auto* u = std::get_if<UniformInterval>(&dist_)) {
    return std::abs(h) <= u->radius ? 0.5 / u->radius : 0.0;
  }
  if (const auto* g = std::get_if<TruncatedGaussianDist>(&dist_)) {
    if (std::abs(h) > g->radius) return 0.0;
    return std::exp(-h * h / (2.0 * g->sigma)) / g->norm;
  }
  throw std::logic_error("density() is not defined for the atomic family");
}

QuadratureResult DisorderDistribution::expect_with_error(
    const RealFn& g, const QuadratureConfig& cfg) const {
  if (const auto* a = std::get_if<FiniteAtomsDist>(&dist_)) {
    detail::CompensatedAccumulator acc;
    for (const auto& [h, p] : a->points) {
      const double v = g(h);
      if (!std::isfinite(v)) {
        throw std::domain_error(
            "expectation integrand returned a non-finite value at h = " +
            std::to_string(h));
      }
      acc.add(p * v);
    }
    return QuadratureResult{acc.value(), 0.0, 0, true};
  }
  const double r = support_radius();
  const auto weighted = [this, &g](double h) { return density(h) * g(h); };
  return integrate_finite(weighted, -r, r, cfg);
}

double DisorderDistribution::expect(const RealFn& g,
                                    const QuadratureConfig& cfg) const {
  const QuadratureResult res = expect_with_error(g, cfg);
  if (!res.converged) {
    throw ConvergenceError(
        "disorder expectation quadrature did not converge within " +
        std::to_string(cfg.max_subdivisions) + " subdivisions");
  }
  return res.value;
}

double DisorderDistribution::sample(std::mt19937_64& rng) const {
  if (const auto* u = std::get_if<UniformInterval>(&dist_)) {
    return u->radius * (2.0 * uniform_deviate(rng) - 1.0);
  }
  if (const auto* g = std::get_if<TruncatedGaussianDist>(&dist_)) {
    for (;;) {
      const double h = g->radius * (2.0 * uniform_deviate(rng) - 1.0);
      if (uniform_deviate(rng) <= std::exp(-h * h / (2.0 * g->sigma))) {
        return h;
      }
    }
  }
  const auto& a = std::get<FiniteAtomsDist>(dist_);
  const double u = uniform_deviate(rng);
  const auto it =
      std::upper_bound(a.cumulative.begin(), a.cumulative.end(), u);
  const std::size_t idx =
      std::min(static_cast<std::size_t>(it - a.cumulative.begin()),
               a.points.size() - 1);
  return a.points[idx].first;
}

}  // namespace dzeta
