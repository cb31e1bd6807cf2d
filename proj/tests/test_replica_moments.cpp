#include <cmath>

#include "doctest.h"
#include "dzeta/replica_moments.hpp"
#include "test_oracles.hpp"

using namespace dzeta;

namespace {
const QuadratureConfig kCfg{};
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * M_PI);
}  // namespace

TEST_SUITE("replica_moments.moment") {
  TEST_CASE("degenerate measure at the origin") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    CHECK(moment(params, dist, 1, kCfg).log_value ==
          doctest::Approx(kLogSqrt2Pi).epsilon(1e-11));
    const double log_z0 = log_partition_function(params, 0.0, kCfg);
    for (int k : {2, 5, 17, 40}) {
      CHECK(moment(params, dist, k, kCfg).log_value ==
            doctest::Approx(k * log_z0).epsilon(1e-11));
    }
  }

  TEST_CASE("degenerate measure off the origin, free model") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::finite_atoms({{1.0, 1.0}});
    // Z(1)^2 = (sqrt(2 pi) e^{1/2})^2
    CHECK(moment(params, dist, 2, kCfg).log_value ==
          doctest::Approx(2.0 * (kLogSqrt2Pi + 0.5)).epsilon(1e-11));
  }

  TEST_CASE("free model with uniform disorder against dense-grid reference") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    for (int k : {1, 3, 8}) {
      // E[Z^k] = (2 pi)^{k/2} * (1/2) int_{-1}^{1} e^{k h^2 / 2} dh
      const double reference =
          k * kLogSqrt2Pi +
          std::log(0.5 * testing::simpson(
                             [k](double h) { return std::exp(0.5 * k * h * h); },
                             -1.0, 1.0, 1 << 14));
      CHECK(moment(params, dist, k, kCfg).log_value ==
            doctest::Approx(reference).epsilon(1e-10));
    }
  }

  TEST_CASE("max-shift invariance") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    for (int k : {1, 2, 4}) {
      const double with_shift = moment(params, dist, k, kCfg).log_value;
      const double without_shift =
          detail::moment_with_shift(params, dist, k, kCfg, 0.0).log_value;
      CHECK(with_shift ==
            doctest::Approx(without_shift).epsilon(1e-9));
    }
  }

  TEST_CASE("order must be positive") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    CHECK_THROWS_AS(moment(params, dist, 0, kCfg), std::invalid_argument);
  }
}

TEST_SUITE("replica_moments.moment_table") {
  TEST_CASE("k_max = 1 reduces to a single moment") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const MomentTable table = moment_table(params, dist, 1, kCfg);
    REQUIRE(table.log_moments.size() == 1);
    CHECK(table.log_moments[0] ==
          doctest::Approx(moment(params, dist, 1, kCfg).log_value)
              .epsilon(1e-12));
  }

  TEST_CASE("degenerate entries are linear in k") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const MomentTable table = moment_table(params, dist, 8, kCfg);
    const double slope = table.log_moments[0];
    for (int k = 1; k <= 8; ++k) {
      CHECK(table.log_moments[k - 1] ==
            doctest::Approx(k * slope).epsilon(1e-10));
    }
  }

  TEST_CASE("log-convexity of the moment sequence") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const MomentTable table = moment_table(params, dist, 12, kCfg);
    for (int k = 2; k < 12; ++k) {
      const double gap = table.log_moments[k] + table.log_moments[k - 2] -
                         2.0 * table.log_moments[k - 1];
      const double slack = 2.0 * (table.error_estimates[k] +
                                  2.0 * table.error_estimates[k - 1] +
                                  table.error_estimates[k - 2]);
      CHECK(gap >= -slack);
    }
  }
}

TEST_SUITE("replica_moments.moment_bound_constants") {
  TEST_CASE("direct substitution") {
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto c = moment_bound_constants({1.0, 6.0}, dist);
    CHECK(c.alpha == 1.0);
    CHECK(c.c_lambda == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(c.beta ==
          doctest::Approx(std::exp(0.75) * std::sqrt(2.0 * M_PI))
              .epsilon(1e-14));
  }

  TEST_CASE("zero-radius support drops the disorder factor") {
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const auto c = moment_bound_constants({1.0, 1.0}, dist);
    CHECK(c.beta == doctest::Approx(std::sqrt(2.0 * M_PI)).epsilon(1e-14));
  }

  TEST_CASE("heavier mass shrinks the gaussian factor") {
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto c = moment_bound_constants({4.0, 6.0}, dist);
    CHECK(c.beta ==
          doctest::Approx(std::exp(0.75) * std::sqrt(M_PI / 2.0))
              .epsilon(1e-14));
  }

  TEST_CASE("free theory has no bound constants") {
    const auto dist = DisorderDistribution::uniform(1.0);
    CHECK_THROWS_AS((moment_bound_constants({1.0, 0.0}, dist)),
                    std::domain_error);
  }
}

TEST_SUITE("replica_moments.verify_moment_growth") {
  TEST_CASE("bound holds for the reference coupling") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto report = verify_moment_growth(params, dist, 15, kCfg);
    REQUIRE(report.error.empty());
    CHECK(report.ok);
    for (const auto& row : report.rows) {
      CHECK(row.pass);
      CHECK(row.margin > 0.0);
    }
  }

  TEST_CASE("degenerate gap grows linearly") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const auto report = verify_moment_growth(params, dist, 10, kCfg);
    REQUIRE(report.error.empty());
    const double log_z0 = log_partition_function(params, 0.0, kCfg);
    const double per_k = std::log(report.beta) - log_z0;
    CHECK(per_k > 0.0);
    for (const auto& row : report.rows) {
      CHECK(row.margin == doctest::Approx(row.k * per_k).epsilon(1e-8));
    }
  }

  TEST_CASE("lambda = 0 is reported, not thrown") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto report = verify_moment_growth(params, dist, 5, kCfg);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.error.empty());
    CHECK(report.rows.empty());
  }

  TEST_CASE("both gaussian-factor conventions are reported") {
    const ModelParams params{4.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const auto report = verify_moment_growth(params, dist, 3, kCfg);
    REQUIRE(report.error.empty());
    // m0_sq = 4: the m0 variant uses sqrt(2 pi / 2) instead of sqrt(2 pi / 4)
    CHECK(report.beta_m0 ==
          doctest::Approx(report.beta * std::sqrt(2.0)).epsilon(1e-12));
  }
}
