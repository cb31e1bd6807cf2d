#include <cmath>

#include "doctest.h"
#include "dzeta/oracle.hpp"
#include "dzeta/replica_moments.hpp"

using namespace dzeta;

namespace {
const QuadratureConfig kCfg{};
}

TEST_SUITE("oracle.quenched_direct") {
  TEST_CASE("free model with uniform disorder") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const double expected = 0.5 * std::log(2.0 * M_PI) + 1.0 / 6.0;
    CHECK(quenched_direct(params, dist, kCfg) ==
          doctest::Approx(expected).epsilon(1e-10));
  }

  TEST_CASE("degenerate measure") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    CHECK(quenched_direct(params, dist, kCfg) ==
          doctest::Approx(log_partition_function(params, 0.0, kCfg))
              .epsilon(1e-12));
  }

  TEST_CASE("free model, heavy mass, symmetric atoms") {
    const ModelParams params{4.0, 0.0};
    const auto dist =
        DisorderDistribution::finite_atoms({{1.0, 0.5}, {-1.0, 0.5}});
    const double expected = 0.5 * std::log(M_PI / 2.0) + 1.0 / 8.0;
    CHECK(quenched_direct(params, dist, kCfg) ==
          doctest::Approx(expected).epsilon(1e-10));
  }

  TEST_CASE("invariant under sign relabeling of atoms") {
    const ModelParams params{1.0, 1.0};
    const auto d1 =
        DisorderDistribution::finite_atoms({{0.7, 0.3}, {-0.2, 0.7}});
    const auto d2 =
        DisorderDistribution::finite_atoms({{-0.7, 0.3}, {0.2, 0.7}});
    CHECK(quenched_direct(params, d1, kCfg) ==
          doctest::Approx(quenched_direct(params, d2, kCfg)).epsilon(1e-10));
  }

  TEST_CASE("jensen ordering against the first moment") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    CHECK(quenched_direct(params, dist, kCfg) <=
          moment(params, dist, 1, kCfg).log_value + 1e-10);
  }
}

TEST_SUITE("oracle.quenched_mc") {
  TEST_CASE("degenerate measure is exact with zero error") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::finite_atoms({{0.0, 1.0}});
    const McConfig mc{1000, 42};
    const auto est = quenched_mc(params, dist, mc, kCfg);
    CHECK(est.estimate ==
          doctest::Approx(log_partition_function(params, 0.0, kCfg))
              .epsilon(1e-15));
    CHECK(est.std_error == 0.0);
  }

  TEST_CASE("free model lands near the closed form") {
    const ModelParams params{1.0, 0.0};
    const auto dist = DisorderDistribution::uniform(1.0);
    const McConfig mc{100000, 2024};
    const auto est = quenched_mc(params, dist, mc, kCfg);
    const double expected = 0.5 * std::log(2.0 * M_PI) + 1.0 / 6.0;
    CHECK(std::abs(est.estimate - expected) <= 3.0 * est.std_error);
  }

  TEST_CASE("same seed, same bits") {
    const ModelParams params{1.0, 1.0};
    const auto dist = DisorderDistribution::truncated_gaussian(1.0, 1.0);
    const McConfig mc{5000, 7};
    const auto e1 = quenched_mc(params, dist, mc, kCfg);
    const auto e2 = quenched_mc(params, dist, mc, kCfg);
    CHECK(e1.estimate == e2.estimate);
    CHECK(e1.std_error == e2.std_error);
  }

  TEST_CASE("agrees with the direct average within four standard errors") {
    const ModelParams params{1.0, 1.0};
    const McConfig mc{20000, 31};
    for (const auto& dist :
         {DisorderDistribution::uniform(1.0),
          DisorderDistribution::truncated_gaussian(1.0, 1.0)}) {
      const auto est = quenched_mc(params, dist, mc, kCfg);
      const double direct = quenched_direct(params, dist, kCfg);
      CHECK(std::abs(est.estimate - direct) <= 4.0 * est.std_error);
    }
  }

  TEST_CASE("sample count must be positive") {
    CHECK_THROWS_AS((McConfig{0, 1}.validate()), std::invalid_argument);
  }
}
