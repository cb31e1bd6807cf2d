#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace dzeta {

/// Euler-Mascheroni constant, double precision.
inline constexpr double EULER_GAMMA = 0.5772156649015329;

/// Tolerances and truncation policy shared by every integral in the library.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  // ratio to the observed peak at which an unbounded integrand is
  // considered negligible and the domain is truncated
  double decay_cutoff = 1e-18;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  bool converged = true;
};

/// Thrown when an adaptive integral fails to reach its tolerance within
/// max_subdivisions and the caller cannot proceed with a flagged result.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

using RealFn = std::function<double(double)>;

// Globally adaptive bisection with a Gauss-Kronrod 7/15 rule per panel.
// One of lo/hi may be infinite; the infinite side is truncated where the
// integrand falls below decay_cutoff times the observed peak.
// Deterministic for fixed inputs. Throws std::domain_error if f returns a
// non-finite value.
QuadratureResult integrate_finite(const RealFn& f, double lo, double hi,
                                  const QuadratureConfig& cfg);

// Integral over all of R of an integrand with unimodal-dominated decay away
// from `center`. Expands symmetric windows about center until both boundary
// values fall below decay_cutoff times the peak, then delegates to
// integrate_finite. Throws std::domain_error if no decay is found within the
// hard window bound (growing integrand, e.g. a negative quartic coupling).
QuadratureResult integrate_real_line(const RealFn& f, double center,
                                     const QuadratureConfig& cfg);

// Exponential integral E1(x) = int_x^inf exp(-t)/t dt, x > 0.
// Power series below x = 1.5, modified Lentz continued fraction above.
double exp_integral_e1(double x);

struct EinSeriesResult {
  double value;
  int k_used;  // number of terms summed
};

// Partial sum of the entire function Ein(x) = sum_{k>=1} (-1)^{k+1} x^k/(k!k),
// terms by recurrence, compensated accumulation. Stops before the first term
// smaller in magnitude than term_tol, or at k_max.
EinSeriesResult ein_series(double x, int k_max, double term_tol);

// Neumaier-compensated sum in the given order; error O(eps)*sum|terms|
// independent of length.
double compensated_sum(std::span<const double> terms);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln k! for k >= 0, accumulated by recurrence.
double log_factorial(int k);

namespace detail {

// Streaming Neumaier accumulator.
class CompensatedAccumulator {
 public:
  void add(double x) {
    const double s = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - s) + x;
    } else {
      comp_ += (x - s) + sum_;
    }
    sum_ = s;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

}  // namespace dzeta
