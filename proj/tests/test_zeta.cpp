#include <cmath>
#include <complex>

#include "doctest.h"
#include "dzeta/oracle.hpp"
#include "dzeta/zeta.hpp"
#include "test_oracles.hpp"

using namespace dzeta;

namespace {
const QuadratureConfig kCfg{};

std::vector<DisorderDistribution> reference_families() {
  return {DisorderDistribution::uniform(1.0),
          DisorderDistribution::truncated_gaussian(1.0, 1.0),
          DisorderDistribution::finite_atoms({{-1.0, 0.5}, {1.0, 0.5}})};
}
}  // namespace

TEST_SUITE("zeta.phi") {
  TEST_CASE("normalization at the origin") {
    const ModelParams params{1.0, 1.0};
    for (const auto& dist : reference_families()) {
      const auto value = phi({0.0, 0.0}, params, dist, kCfg);
      CHECK(std::abs(value.real() - 1.0) <= 1e-12);
      CHECK(value.imag() == 0.0);
    }
  }

  TEST_CASE("degenerate measure inverts the partition function") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const double z0 = partition_function(params, 0.0, kCfg);
    CHECK(phi({1.0, 0.0}, params, dist, kCfg).real() ==
          doctest::Approx(1.0 / z0).epsilon(1e-10));
  }

  TEST_CASE("modulus bound from the h = 0 partition function") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const double z0 = partition_function(params, 0.0, kCfg);
    const std::vector<std::complex<double>> points{
        {0.5, 0.0}, {1.0, 1.0}, {2.0, 0.0}};
    for (const auto& s : points) {
      const auto value = phi(s, params, dist, kCfg);
      CHECK(std::abs(value) <= std::pow(z0, -s.real()) + 1e-10);
    }
  }

  TEST_CASE("continuity toward the origin") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    double prev_gap = std::numeric_limits<double>::infinity();
    for (double s : {1e-1, 1e-2, 1e-3}) {
      const double gap =
          std::abs(phi({s, 0.0}, params, dist, kCfg).real() - 1.0);
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(prev_gap < 2e-3);
  }

  TEST_CASE("one-sided derivative at the origin recovers the free energy") {
    const ModelParams params{1.0, 1.0};
    for (const auto& dist : reference_families()) {
      const double h_s = 1e-5;
      const double fd =
          -(phi({h_s, 0.0}, params, dist, kCfg).real() - 1.0) / h_s;
      const double direct = quenched_direct(params, dist, kCfg);
      CHECK(fd == doctest::Approx(direct).epsilon(1e-3));
    }
  }

  TEST_CASE("negative real part rejected except the annealed point") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    CHECK_THROWS_AS((phi({-0.5, 0.0}, params, dist, kCfg)), std::domain_error);
    CHECK_THROWS_AS((phi({-1.0, 0.5}, params, dist, kCfg)), std::domain_error);
    const auto annealed_point = phi({-1.0, 0.0}, params, dist, kCfg);
    CHECK(annealed_point.real() ==
          doctest::Approx(std::exp(moment(params, dist, 1, kCfg).log_value))
              .epsilon(1e-10));
  }
}

TEST_SUITE("zeta.annealed_value") {
  TEST_CASE("degenerate measure") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    CHECK(annealed_value(params, dist, kCfg) ==
          doctest::Approx(-log_partition_function(params, 0.0, kCfg))
              .epsilon(1e-11));
  }

  TEST_CASE("free model reduces to a one-dimensional average") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    // E[Z] = sqrt(2 pi) * (1/2) int_{-1}^{1} e^{h^2/2} dh
    const double mean_z =
        std::sqrt(2.0 * M_PI) * 0.5 *
        testing::simpson([](double h) { return std::exp(0.5 * h * h); }, -1.0,
                         1.0, 1 << 14);
    CHECK(annealed_value(params, dist, kCfg) ==
          doctest::Approx(-std::log(mean_z)).epsilon(1e-10));
  }

  TEST_CASE("invariant under atom relabeling") {
    const ModelParams params{1.0, 1.0};
    const auto d1 = DisorderDistribution::finite_atoms(
        {{-1.0, 0.25}, {0.5, 0.5}, {1.0, 0.25}});
    const auto d2 = DisorderDistribution::finite_atoms(
        {{1.0, 0.25}, {-1.0, 0.25}, {0.5, 0.5}});
    CHECK(annealed_value(params, d1, kCfg) ==
          doctest::Approx(annealed_value(params, d2, kCfg)).epsilon(1e-12));
  }
}

TEST_SUITE("zeta.series_term") {
  TEST_CASE("first term is the first moment") {
    const double log_m1 = std::log(3.7);
    CHECK(series_term(1, 1.0, log_m1) == doctest::Approx(3.7).epsilon(1e-14));
  }

  TEST_CASE("second term halves twice and flips sign") {
    CHECK(series_term(2, 1.0, std::log(4.0)) ==
          doctest::Approx(-1.0).epsilon(1e-14));
  }

  TEST_CASE("signs alternate") {
    for (int k = 1; k <= 10; ++k) {
      const double term = series_term(k, 1.0, 0.0);
      CHECK((k % 2 == 1 ? term > 0.0 : term < 0.0));
    }
  }

  TEST_CASE("overflow signals that a must shrink") {
    CHECK_THROWS_AS(series_term(1, 1.0, 800.0), std::overflow_error);
  }
}

TEST_SUITE("zeta.remainder") {
  TEST_CASE("vanishes for large a") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    double prev = std::abs(remainder(0.5, params, dist, kCfg));
    for (double a : {2.0, 8.0, 32.0}) {
      const double r = std::abs(remainder(a, params, dist, kCfg));
      CHECK(r < prev);
      prev = r;
    }
    CHECK(prev < 1e-30);
  }

  TEST_CASE("degenerate measure reduces to one exponential integral") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const double z0 = partition_function(params, 0.0, kCfg);
    for (double a : {0.5, 1.0, 3.0}) {
      CHECK(remainder(a, params, dist, kCfg) ==
            doctest::Approx(-exp_integral_e1(a * z0)).epsilon(1e-11));
    }
  }

  TEST_CASE("matches the raw double integral") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const double via_e1 = remainder(1.0, params, dist, kCfg);
    const double via_2d =
        testing::remainder_double_quadrature(1.0, params, dist, kCfg);
    CHECK(via_e1 == doctest::Approx(via_2d).epsilon(1e-8));
  }
}

TEST_SUITE("zeta.remainder_bound") {
  TEST_CASE("free-model value at a = 1") {
    const ModelParams params{1.0, 0.0};
    const double z0 = std::sqrt(2.0 * M_PI);
    CHECK(remainder_bound(1.0, params, kCfg) ==
          doctest::Approx(std::exp(-z0) / z0).epsilon(1e-10));
  }

  TEST_CASE("monotone decreasing in a") {
    const ModelParams params{1.0, 1.0};
    double prev = remainder_bound(0.25, params, kCfg);
    for (double a : {0.5, 1.0, 2.0, 5.0}) {
      const double b = remainder_bound(a, params, kCfg);
      CHECK(b < prev);
      prev = b;
    }
  }

  TEST_CASE("dominates the remainder on an a-grid") {
    const ModelParams params{1.0, 1.0};
    for (const auto& dist : reference_families()) {
      for (double a : {0.5, 1.0, 2.0, 5.0}) {
        CHECK(std::abs(remainder(a, params, dist, kCfg)) <=
              remainder_bound(a, params, kCfg) + 1e-12);
      }
    }
  }
}

TEST_SUITE("zeta.quenched_free_energy") {
  TEST_CASE("free model closed form") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    SeriesConfig scfg;
    scfg.k_max = 40;
    const auto report = quenched_free_energy(params, dist, scfg, kCfg);
    CHECK(report.series_converged);
    const double expected = 0.5 * std::log(2.0 * M_PI) + 1.0 / 6.0;
    CHECK(report.total == doctest::Approx(expected).epsilon(1e-7));
    CHECK(report.total ==
          report.series_partial + report.correction + report.remainder_value);
    CHECK(std::abs(report.remainder_value) <=
          report.remainder_bound + 1e-12);
  }

  TEST_CASE("degenerate measure gives ln Z(0) for any a") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const double log_z0 = log_partition_function(params, 0.0, kCfg);
    for (double a : {0.5, 1.0, 2.0}) {
      SeriesConfig scfg;
      scfg.a = a;
      const auto report = quenched_free_energy(params, dist, scfg, kCfg);
      CHECK(report.series_converged);
      CHECK(report.total == doctest::Approx(log_z0).epsilon(1e-9));
    }
  }

  TEST_CASE("split-point independence") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    std::vector<double> totals;
    for (double a : {0.5, 1.0, 2.0}) {
      SeriesConfig scfg;
      scfg.a = a;
      totals.push_back(quenched_free_energy(params, dist, scfg, kCfg).total);
    }
    for (std::size_t i = 1; i < totals.size(); ++i) {
      CHECK(totals[i] == doctest::Approx(totals[0]).epsilon(1e-7));
    }
  }

  TEST_CASE("identity against the direct average for every family") {
    const ModelParams params{1.0, 1.0};
    for (const auto& dist : reference_families()) {
      const double direct = quenched_direct(params, dist, kCfg);
      for (double a : {0.5, 1.0, 2.0}) {
        SeriesConfig scfg;
        scfg.a = a;
        const auto report = quenched_free_energy(params, dist, scfg, kCfg);
        CHECK(report.series_converged);
        const double tolerance =
            std::max(1e-7, report.tail_bound + report.series_error +
                               100.0 * kCfg.abs_tol);
        CHECK(std::abs(report.total - direct) <= tolerance);
      }
    }
  }

  TEST_CASE("oracle attachment") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto report =
        quenched_free_energy(params, dist, SeriesConfig{}, kCfg, true);
    REQUIRE(report.oracle_value.has_value());
    REQUIRE(report.discrepancy.has_value());
    CHECK(*report.discrepancy ==
          doctest::Approx(report.total - *report.oracle_value).epsilon(1e-15));
    CHECK(std::abs(*report.discrepancy) < 1e-6);
  }

  TEST_CASE("tail bound covers the truncation error") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    SeriesConfig coarse;
    coarse.term_tol = 1e-6;  // stop early on purpose
    SeriesConfig fine;
    fine.term_tol = 1e-14;
    fine.k_max = 80;
    const auto early = quenched_free_energy(params, dist, coarse, kCfg);
    const auto late = quenched_free_energy(params, dist, fine, kCfg);
    CHECK(early.k_used < late.k_used);
    CHECK(std::abs(early.series_partial - late.series_partial) <=
          early.tail_bound + 1e-10);
  }

  TEST_CASE("cancellation warning beyond the practical ceiling") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    SeriesConfig scfg;
    scfg.a = 50.0;
    const auto report = quenched_free_energy(params, dist, scfg, kCfg);
    CHECK(report.cancellation_warning);
    CHECK_FALSE(report.series_converged);
    SeriesConfig small;
    small.a = 1.0;
    CHECK_FALSE(
        quenched_free_energy(params, dist, small, kCfg).cancellation_warning);
  }

  TEST_CASE("jensen ordering against the annealed value") {
    const ModelParams params{1.0, 1.0};
    for (const auto& dist : reference_families()) {
      const auto report =
          quenched_free_energy(params, dist, SeriesConfig{}, kCfg);
      // quenched total <= ln E[Z] = -annealed_value
      CHECK(report.total <= -annealed_value(params, dist, kCfg) + 1e-10);
    }
  }
}

TEST_SUITE("zeta.phi_split") {
  TEST_CASE("split sums back to phi") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const double s = 0.5;
    const auto parts = phi_split(s, 1.0, params, dist, kCfg);
    const double whole = phi({s, 0.0}, params, dist, kCfg).real();
    CHECK(parts.phi1 + parts.phi2 == doctest::Approx(whole).epsilon(1e-8));
  }

  TEST_CASE("split sums back to phi for s above one") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{-1.0, 0.5}, {1.0, 0.5}});
    const double s = 1.5;
    const auto parts = phi_split(s, 0.8, params, dist, kCfg);
    const double whole = phi({s, 0.0}, params, dist, kCfg).real();
    CHECK(parts.phi1 + parts.phi2 == doctest::Approx(whole).epsilon(1e-8));
  }

  TEST_CASE("head vanishes as a goes to zero") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    double prev = phi_split(0.5, 1.0, params, dist, kCfg).phi1;
    for (double a : {1e-2, 1e-4, 1e-6}) {
      const double head = phi_split(0.5, a, params, dist, kCfg).phi1;
      CHECK(head < prev);
      prev = head;
    }
    CHECK(prev < 1e-2);
  }

  TEST_CASE("degenerate tail at s = 1 has a closed form") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const double z0 = partition_function(params, 0.0, kCfg);
    for (double a : {0.5, 1.0}) {
      const auto parts = phi_split(1.0, a, params, dist, kCfg);
      CHECK(parts.phi2 ==
            doctest::Approx(std::exp(-z0 * a) / z0).epsilon(1e-9));
    }
  }

  TEST_CASE("domain") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    CHECK_THROWS_AS(phi_split(0.0, 1.0, params, dist, kCfg),
                    std::domain_error);
    CHECK_THROWS_AS(phi_split(0.5, 0.0, params, dist, kCfg),
                    std::invalid_argument);
  }
}
