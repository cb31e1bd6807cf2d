#include "dzeta/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace dzeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss-7 weights, paired with the odd-indexed Kronrod nodes plus the center.
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double eval_checked(const RealFn& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw std::domain_error("integrand returned a non-finite value at x = " +
                            std::to_string(x));
  }
  return v;
}

struct Panel {
  double lo, hi;
  double value;
  double error;
};

Panel gk15(const RealFn& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double halflen = 0.5 * (hi - lo);

  const double fc = eval_checked(f, center);
  double result_kronrod = kKronrodWeights[7] * fc;
  double result_gauss = kGaussWeights[3] * fc;
  double result_abs = kKronrodWeights[7] * std::abs(fc);

  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = halflen * kKronrodNodes[j];
    fv1[j] = eval_checked(f, center - dx);
    fv2[j] = eval_checked(f, center + dx);
    const double fsum = fv1[j] + fv2[j];
    result_kronrod += kKronrodWeights[j] * fsum;
    result_abs += kKronrodWeights[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) {
      result_gauss += kGaussWeights[(j - 1) / 2] * fsum;
    }
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kKronrodWeights[j] *
                  (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  const double scale = std::abs(halflen);
  result_asc *= scale;
  result_abs *= scale;
  double err = std::abs((result_kronrod - result_gauss) * halflen);
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  err = std::max(err, 50.0 * kEps * result_abs);

  return Panel{lo, hi, result_kronrod * halflen, err};
}

QuadratureResult adaptive(const RealFn& f, double lo, double hi,
                          const QuadratureConfig& cfg) {
  std::vector<Panel> panels;
  panels.reserve(64);
  panels.push_back(gk15(f, lo, hi));

  auto totals = [&panels]() {
    detail::CompensatedAccumulator value;
    double error = 0.0;
    for (const Panel& p : panels) {
      value.add(p.value);
      error += p.error;
    }
    return std::pair<double, double>(value.value(), error);
  };

  auto [value, error] = totals();
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)) &&
         static_cast<int>(panels.size()) < cfg.max_subdivisions) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.lo + p.hi);
    if (mid <= p.lo || mid >= p.hi) break;  // interval at rounding resolution
    panels[worst] = gk15(f, p.lo, mid);
    panels.push_back(gk15(f, mid, p.hi));
    std::tie(value, error) = totals();
  }

  // Fixed summation order regardless of refinement history.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  detail::CompensatedAccumulator acc;
  double total_error = 0.0;
  for (const Panel& p : panels) {
    acc.add(p.value);
    total_error += p.error;
  }

  QuadratureResult res;
  res.value = acc.value();
  res.error_estimate = total_error;
  res.subdivisions_used = static_cast<int>(panels.size());
  res.converged =
      total_error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(res.value));
  return res;
}

constexpr int kMaxWindowDoublings = 120;

// Expand [anchor, anchor + dir*w] until the boundary integrand is negligible
// relative to the peak seen so far. Returns the boundary.
double expand_until_decayed(const RealFn& f, double anchor, double dir,
                            const QuadratureConfig& cfg) {
  double w = 1.0;
  double peak = std::abs(eval_checked(f, anchor));
  for (int iter = 0; iter < kMaxWindowDoublings; ++iter) {
    for (double frac : {0.25, 0.5, 0.75}) {
      peak = std::max(peak, std::abs(eval_checked(f, anchor + dir * frac * w)));
    }
    const double edge = std::abs(eval_checked(f, anchor + dir * w));
    peak = std::max(peak, edge);
    if (peak == 0.0 && iter >= 4) return anchor + dir * w;
    if (peak > 0.0 && edge <= cfg.decay_cutoff * peak) return anchor + dir * w;
    w *= 2.0;
    if (!std::isfinite(anchor + dir * w)) break;
  }
  throw std::domain_error(
      "integrand does not decay away from the expansion anchor; "
      "the integral over an unbounded domain is ill-posed");
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("quadrature.abs_tol must be > 0");
  }
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("quadrature.rel_tol must be > 0");
  }
  if (max_subdivisions < 1) {
    throw std::invalid_argument("quadrature.max_subdivisions must be >= 1");
  }
  if (!(decay_cutoff > 0.0 && decay_cutoff < 1.0)) {
    throw std::invalid_argument("quadrature.decay_cutoff must be in (0, 1)");
  }
}

QuadratureResult integrate_finite(const RealFn& f, double lo, double hi,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  if (lo_inf && hi_inf) {
    return integrate_real_line(f, 0.0, cfg);
  }
  if (hi_inf) {
    hi = expand_until_decayed(f, lo, +1.0, cfg);
  } else if (lo_inf) {
    lo = expand_until_decayed(f, hi, -1.0, cfg);
  }
  if (!(lo < hi)) {
    throw std::invalid_argument("integrate_finite requires lo < hi");
  }
  return adaptive(f, lo, hi, cfg);
}

QuadratureResult integrate_real_line(const RealFn& f, double center,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(center)) {
    throw std::invalid_argument("integrate_real_line requires a finite center");
  }

  double w = 1.0;
  double peak = std::abs(eval_checked(f, center));
  for (int iter = 0; iter < kMaxWindowDoublings; ++iter) {
    for (double frac : {0.25, 0.5, 0.75}) {
      peak = std::max(peak, std::abs(eval_checked(f, center - frac * w)));
      peak = std::max(peak, std::abs(eval_checked(f, center + frac * w)));
    }
    const double left = std::abs(eval_checked(f, center - w));
    const double right = std::abs(eval_checked(f, center + w));
    peak = std::max({peak, left, right});
    if (peak == 0.0 && iter >= 4) {
      return QuadratureResult{0.0, 0.0, 0, true};
    }
    if (peak > 0.0 && left <= cfg.decay_cutoff * peak &&
        right <= cfg.decay_cutoff * peak) {
      return adaptive(f, center - w, center + w, cfg);
    }
    w *= 2.0;
    if (!std::isfinite(center + w) || !std::isfinite(center - w)) break;
  }
  throw std::domain_error(
      "integrand does not decay away from its center; "
      "check that the action is bounded below (lambda >= 0)");
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("exp_integral_e1 requires x > 0");
  }
  if (x <= 1.5) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    detail::CompensatedAccumulator acc;
    double magnitude = x;  // x^k / k!
    for (int k = 1; k <= 200; ++k) {
      const double term = (k % 2 == 1 ? magnitude : -magnitude) / k;
      acc.add(term);
      if (std::abs(term) < kEps * std::abs(acc.value())) break;
      magnitude *= x / (k + 1);
    }
    return -EULER_GAMMA - std::log(x) + acc.value();
  }
  // Continued fraction E1(x) = e^{-x} / (x+1 - 1/(x+3 - 4/(x+5 - 9/(...)))),
  // evaluated by the modified Lentz algorithm.
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double fraction = d;
  for (int n = 1; n <= 300; ++n) {
    const double a = -static_cast<double>(n) * n;
    b += 2.0;
    d = b + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = b + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    fraction *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x) * fraction;
}

EinSeriesResult ein_series(double x, int k_max, double term_tol) {
  if (!(x >= 0.0)) {
    throw std::domain_error("ein_series requires x >= 0");
  }
  if (k_max < 0) {
    throw std::invalid_argument("ein_series requires k_max >= 0");
  }
  detail::CompensatedAccumulator acc;
  double magnitude = x;  // x^k / k!, never an explicit factorial
  int k_used = 0;
  for (int k = 1; k <= k_max; ++k) {
    const double term = (k % 2 == 1 ? magnitude : -magnitude) / k;
    if (std::abs(term) < term_tol) break;
    acc.add(term);
    k_used = k;
    magnitude *= x / (k + 1);
  }
  return EinSeriesResult{acc.value(), k_used};
}

double compensated_sum(std::span<const double> terms) {
  detail::CompensatedAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma requires x > 0");
  }
  return std::lgamma(x);
}

double log_factorial(int k) {
  if (k < 0) {
    throw std::domain_error("log_factorial requires k >= 0");
  }
  detail::CompensatedAccumulator acc;
  for (int j = 2; j <= k; ++j) acc.add(std::log(static_cast<double>(j)));
  return acc.value();
}

}  // namespace dzeta
