#include <doctest.h>

#include "approxmono/checks.hpp"
#include "approxmono/function_envelopes.hpp"
#include "approxmono/variation.hpp"
#include "oracles.hpp"

using namespace approxmono;

namespace {

SampledFn fn(std::vector<double> v) {
  const Grid grid(0.0, 1.0, v.size());
  return SampledFn(grid, std::move(v));
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({3}), ConstructionError);
  CHECK_THROWS_AS(Partition({0, 2, 2}), ConstructionError);
  CHECK_THROWS_AS(phi_variation(fn({0, 1}), Partition({0, 2}), ErrorFn(1.0, {0, 0})), DimensionError);
}

TEST_CASE("phi variation examples") {
  const auto f = fn({0, 1, 0});
  CHECK(phi_variation(f, Partition({0, 1, 2}), ErrorFn(1.0, {0, 0, 0})) == 2.0);
  CHECK(phi_variation(f, Partition({0, 2}), ErrorFn(1.0, {0, 1, 2})) == -2.0);
  CHECK(phi_variation(fn({0, 0.5, 1}), Partition({0, 2}), ErrorFn(1.0, {0, 1, 2})) <= 0.0);
}

TEST_CASE("total variation examples") {
  const auto f = fn({0, 1, 0});
  CHECK(total_phi_variation(f, ErrorFn(1.0, {0, 0, 0}), 0, 2).prefix() == std::vector<double>{0, 1, 2});
  CHECK(total_phi_variation(f, ErrorFn(1.0, {0, 1, 2}), 0, 2).prefix() == std::vector<double>{0, 0, 0});
  const auto inc = fn({1, 2, 2, 5, 7});
  const auto t = total_phi_variation(inc, ErrorFn(1.0, {0, 0, 0, 0, 0}), 1, 4);
  CHECK(t.prefix() == std::vector<double>{0, 0, 3, 5});
  CHECK(t.at(3) == 3.0);
  CHECK(t.start_index() == 1);
  CHECK(t.end_index() == 4);
  CHECK_THROWS_AS(t.at(0), DimensionError);
  CHECK_THROWS_AS(total_phi_variation(f, ErrorFn(1.0, {0, 0, 0}), 2, 2), DimensionError);
  CHECK_THROWS_AS(total_phi_variation(f, ErrorFn(1.0, {0, 0, 0}), 0, 3), DimensionError);
}

TEST_CASE("holder via variation examples") {
  CHECK_FALSE(is_holder_via_variation(fn({0, 2}), ErrorFn(1.0, {0, 1})));
  CHECK(is_holder_via_variation(fn({3, 3, 3}), ErrorFn(1.0, {0, 0, 0})));
  CHECK(is_holder_via_variation(fn({0, 0.5, 1}), ErrorFn(1.0, {0, 1, 2})));
}

TEST_CASE("jordan decomposition examples") {
  const auto inc = fn({1, 2, 4, 4, 6});
  const ErrorFn zero(1.0, {0, 0, 0, 0, 0});
  const auto jp = jordan_decompose(inc, zero);
  CHECK(jp.g.values() == std::vector<double>{0.5, 1.5, 3.5, 3.5, 5.5});
  CHECK(jp.h.values() == std::vector<double>{-0.5, -0.5, -0.5, -0.5, -0.5});

  const auto f = fn({0, 1, 0});
  const ErrorFn phi(1.0, {0, 1, 2});
  const auto j2 = jordan_decompose(f, phi);
  CHECK(is_phi_monotone(j2.g, phi).holds);
  CHECK(is_phi_monotone(j2.h, phi).holds);
  for (std::size_t i = 0; i < 3; ++i) CHECK(j2.g[i] - j2.h[i] == f[i]);

  const auto tail = jordan_decompose(inc, zero, 2);
  CHECK(tail.g.size() == 3);
  CHECK(tail.g.grid().origin() == 2.0);
  CHECK(tail.anchor == 2);
  CHECK_THROWS_AS(jordan_decompose(inc, zero, 4), DimensionError);
}

TEST_CASE("delta variation bound examples") {
  const auto g = fn({0, 1, 3, 3});
  const ErrorFn zero(1.0, {0, 0, 0, 0});
  auto b = delta_variation_bound(g, g, zero, zero);
  CHECK(b.variation <= 0.0);
  CHECK(b.bound == 6.0);
  b = delta_variation_bound(g, fn({0, 0, 0, 0}), zero, zero);
  CHECK(b.variation == 3.0);
  CHECK(b.bound == 3.0);
  CHECK_THROWS_AS(delta_variation_bound(fn({1, 0, 0, 0}), g, zero, zero), HypothesisError);
  try {
    delta_variation_bound(g, fn({1, 0, 0, 0}), zero, zero);
  } catch (const HypothesisError& e) {
    CHECK(e.witness().kind == WitnessKind::monotone_violation);
  }
}

TEST_CASE("property: variation DP equals partition enumeration") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 12));
    const auto f = oracle::random_fn(rng, n);
    const auto phi = oracle::random_error(rng, n, 0.0, 2.0);
    const std::size_t start = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(n) - 2));
    const auto t = total_phi_variation(f, phi, start, n - 1);
    for (std::size_t i = start + 1; i < n; ++i) {
      CHECK(std::abs(t.at(i) - oracle::partition_max(f.values(), phi.values(), start, i)) <= 1e-12);
    }
  }
}

TEST_CASE("property: holder via variation agrees with pairwise check") {
  oracle::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 15));
    const auto f = oracle::random_fn(rng, n, -1.0, 1.0);
    const auto phi = oracle::random_error(rng, n, 0.0, 2.0);
    CHECK(is_holder_via_variation(f, phi) == is_phi_holder(f, phi).holds);
  }
}

TEST_CASE("property: jordan halves are monotone and reconstruct f") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 30));
    const auto f = oracle::random_fn(rng, n, -3.0, 3.0);
    const auto phi = oracle::random_error(rng, n, 0.0, 1.0);
    const std::size_t anchor = static_cast<std::size_t>(rng.integer(0, static_cast<long long>(n) - 2));
    const auto jp = jordan_decompose(f, phi, anchor);
    const auto tail_phi = phi.truncated(n - anchor);
    CHECK(is_phi_monotone(jp.g, tail_phi).holds);
    CHECK(is_phi_monotone(jp.h, tail_phi).holds);
    for (std::size_t k = 0; k < jp.g.size(); ++k) {
      const double x = f[anchor + k];
      CHECK(std::abs(jp.g[k] - jp.h[k] - x) <= 4 * std::numeric_limits<double>::epsilon() *
                                                   std::max({1.0, std::abs(jp.g[k]), std::abs(jp.h[k])}));
    }
  }
}
