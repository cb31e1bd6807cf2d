#include "dzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dzeta/oracle.hpp"

namespace dzeta {

namespace {

constexpr double kMaxExpArg = 700.0;  // exp() overflows just above 709
constexpr double kCancellationCeiling = 30.0;

double partition_at(const ModelParams& params, double h,
                    const QuadratureConfig& cfg) {
  return std::exp(log_partition_function(params, h, cfg));
}

}  // namespace

void SeriesConfig::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("series.a must be finite and > 0");
  }
  if (k_max < 1) {
    throw std::invalid_argument("series.k_max must be >= 1");
  }
  if (!(term_tol > 0.0)) {
    throw std::invalid_argument("series.term_tol must be > 0");
  }
}

std::complex<double> phi(std::complex<double> s, const ModelParams& params,
                         const DisorderDistribution& dist,
                         const QuadratureConfig& cfg) {
  const double sigma = s.real();
  const double tau = s.imag();
  if (sigma < 0.0) {
    if (s == std::complex<double>(-1.0, 0.0)) {
      // Annealed point: Phi(-1) = E[Z].
      return {std::exp(moment(params, dist, 1, cfg).log_value), 0.0};
    }
    throw std::domain_error(
        "phi(s) is defined for Re(s) >= 0 (s = -1 is routed to the annealed "
        "value)");
  }
  const double real_part = dist.expect(
      [&](double h) {
        const double logz = log_partition_function(params, h, cfg);
        return std::exp(-sigma * logz) * std::cos(tau * logz);
      },
      cfg);
  if (tau == 0.0) {
    return {real_part, 0.0};
  }
  const double imag_part = dist.expect(
      [&](double h) {
        const double logz = log_partition_function(params, h, cfg);
        return -std::exp(-sigma * logz) * std::sin(tau * logz);
      },
      cfg);
  return {real_part, imag_part};
}

double annealed_value(const ModelParams& params,
                      const DisorderDistribution& dist,
                      const QuadratureConfig& cfg) {
  return -moment(params, dist, 1, cfg).log_value;
}

double series_term(int k, double a, double log_moment_k) {
  if (k < 1) {
    throw std::invalid_argument("series_term requires k >= 1");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("series_term requires a > 0");
  }
  const double exponent = k * std::log(a) + log_moment_k - log_factorial(k) -
                          std::log(static_cast<double>(k));
  if (exponent > kMaxExpArg) {
    throw std::overflow_error(
        "series term overflows double precision; reduce the split point a");
  }
  const double magnitude = std::exp(exponent);
  return (k % 2 == 1) ? magnitude : -magnitude;
}

double remainder(double a, const ModelParams& params,
                 const DisorderDistribution& dist,
                 const QuadratureConfig& cfg) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("remainder requires a > 0");
  }
  const double log_a = std::log(a);
  return -dist.expect(
      [&](double h) {
        const double logz = log_partition_function(params, h, cfg);
        if (logz + log_a > kMaxExpArg) return 0.0;  // E1 underflows to zero
        return exp_integral_e1(a * std::exp(logz));
      },
      cfg);
}

double remainder_bound(double a, const ModelParams& params,
                       const QuadratureConfig& cfg) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("remainder_bound requires a > 0");
  }
  const double za = a * partition_at(params, 0.0, cfg);
  return std::exp(-za) / za;
}

FreeEnergyReport quenched_free_energy(const ModelParams& params,
                                      const DisorderDistribution& dist,
                                      const SeriesConfig& series_cfg,
                                      const QuadratureConfig& cfg,
                                      bool attach_oracle) {
  params.validate();
  series_cfg.validate();
  const double a = series_cfg.a;

  FreeEnergyReport report;
  report.a = a;

  const double peak_logz = detail::max_log_partition(params, dist, cfg);
  report.cancellation_warning =
      std::log(a) + peak_logz > std::log(kCancellationCeiling);

  std::vector<double> terms;
  terms.reserve(series_cfg.k_max);
  bool decreasing_established = false;
  bool stopped_early = false;
  double prev_abs = -1.0;  // unset until the first term
  double series_error = 0.0;
  report.tail_bound = std::numeric_limits<double>::infinity();

  // Stop at the first term below term_tol once monotone decrease has been
  // observed; the stopping term itself is the first omitted one and bounds
  // the truncation error of the alternating series.
  for (int k = 1; k <= series_cfg.k_max; ++k) {
    const MomentValue mv =
        detail::moment_with_shift(params, dist, k, cfg, k * peak_logz);
    double term;
    try {
      term = series_term(k, a, mv.log_value);
    } catch (const std::overflow_error&) {
      report.series_converged = false;
      break;
    }
    const double mag = std::abs(term);
    const bool decreased = prev_abs >= 0.0 && mag < prev_abs;
    if (decreased) decreasing_established = true;
    if (decreasing_established && decreased && mag < series_cfg.term_tol) {
      report.tail_bound = mag;
      stopped_early = true;
      break;
    }
    terms.push_back(term);
    series_error += mag * mv.error;
    prev_abs = mag;
  }

  report.k_used = static_cast<int>(terms.size());
  if (report.series_converged && !stopped_early) {
    // Ran to k_max: the last term bounds the tail only if still decreasing.
    const bool tail_decreasing =
        terms.size() >= 2 &&
        std::abs(terms.back()) < std::abs(terms[terms.size() - 2]);
    if (tail_decreasing) {
      report.tail_bound = std::abs(terms.back());
    } else {
      report.series_converged = false;
    }
  }

  report.series_partial = compensated_sum(terms);
  report.series_error = series_error;
  report.correction = -(std::log(a) + EULER_GAMMA);
  report.remainder_value = remainder(a, params, dist, cfg);
  report.remainder_bound = remainder_bound(a, params, cfg);
  report.total =
      report.series_partial + report.correction + report.remainder_value;

  if (attach_oracle) {
    report.oracle_value = quenched_direct(params, dist, cfg);
    report.discrepancy = report.total - *report.oracle_value;
  }
  return report;
}

PhiSplit phi_split(double s, double a, const ModelParams& params,
                   const DisorderDistribution& dist,
                   const QuadratureConfig& cfg) {
  if (!(s > 0.0)) {
    throw std::domain_error(
        "phi_split requires s > 0 (the 1/Gamma(s) representation)");
  }
  if (!(a > 0.0)) {
    throw std::invalid_argument("phi_split requires a > 0");
  }
  const double inv_gamma = std::exp(-log_gamma(s));

  const auto head_integral = [&](double h) {
    const double z = partition_at(params, h, cfg);
    if (s >= 1.0) {
      const auto f = [&](double t) {
        return std::pow(t, s - 1.0) * std::exp(-z * t);
      };
      return integrate_finite(f, 0.0, a, cfg).value;
    }
    // For 0 < s < 1 substitute u = t^s; t^{s-1} dt = du / s removes the
    // endpoint singularity.
    const auto f = [&](double u) {
      return std::exp(-z * std::pow(u, 1.0 / s));
    };
    return integrate_finite(f, 0.0, std::pow(a, s), cfg).value / s;
  };
  const auto tail_integral = [&](double h) {
    const double z = partition_at(params, h, cfg);
    const auto f = [&](double t) {
      return std::pow(t, s - 1.0) * std::exp(-z * t);
    };
    return integrate_finite(f, a, std::numeric_limits<double>::infinity(), cfg)
        .value;
  };

  PhiSplit split;
  split.phi1 = inv_gamma * dist.expect(head_integral, cfg);
  split.phi2 = inv_gamma * dist.expect(tail_integral, cfg);
  return split;
}

}  // namespace dzeta
