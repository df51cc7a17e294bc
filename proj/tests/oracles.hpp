#pragma once

// Brute-force reference implementations and random generators used by the
// unit, property and acceptance tests. Nothing here shares code with the
// library algorithms it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "approxmono/grid.hpp"

namespace oracle {

using approxmono::ErrorFn;
using approxmono::Grid;
using approxmono::SampledFn;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }
  /// Multiple of 1/64 in [lo, hi]; sums of a few hundred of these are exact.
  double dyadic(double lo, double hi) {
    return static_cast<double>(integer(static_cast<long long>(std::ceil(lo * 64)),
                                       static_cast<long long>(std::floor(hi * 64)))) /
           64.0;
  }

 private:
  std::mt19937_64 eng_;
};

inline std::vector<double> random_values(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

inline SampledFn random_fn(Rng& rng, std::size_t n, double lo = -2.0, double hi = 2.0,
                           double step = 1.0) {
  return SampledFn(Grid(0.0, step, n), random_values(rng, n, lo, hi));
}

inline SampledFn dyadic_fn(Rng& rng, std::size_t n, double lo = -4.0, double hi = 4.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.dyadic(lo, hi);
  return SampledFn(Grid(0.0, 1.0, n), std::move(v));
}

/// Random error function; offset 0 is zero unless `any_zero_value` is set.
inline ErrorFn random_error(Rng& rng, std::size_t n, double lo = 0.0, double hi = 2.0,
                            bool any_zero_value = false, double step = 1.0) {
  std::vector<double> v = random_values(rng, n, lo, hi);
  if (!any_zero_value) v[0] = 0.0;
  return ErrorFn(step, std::move(v));
}

inline ErrorFn dyadic_error(Rng& rng, std::size_t n, double lo = 0.0, double hi = 2.0) {
  std::vector<double> v(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) v[k] = rng.dyadic(lo, hi);
  return ErrorFn(1.0, std::move(v));
}

/// Nondecreasing, concave sequence with value 0 at offset 0: subadditive.
inline ErrorFn random_increasing_subadditive(Rng& rng, std::size_t n, double max_slope = 1.0) {
  std::vector<double> slopes = random_values(rng, n - 1, 0.0, max_slope);
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  std::vector<double> v(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) v[k] = v[k - 1] + slopes[k - 1];
  return ErrorFn(1.0, std::move(v));
}

/// Nonincreasing on offsets >= 1, value 0 at offset 0.
inline ErrorFn random_decreasing(Rng& rng, std::size_t n, double hi = 2.0) {
  std::vector<double> v = random_values(rng, n - 1, 0.0, hi);
  std::sort(v.begin(), v.end(), std::greater<>());
  v.insert(v.begin(), 0.0);
  return ErrorFn(1.0, std::move(v));
}

// ---------------------------------------------------------------------------
// Envelope oracles
// ---------------------------------------------------------------------------

/// min over all compositions k = k_1 + ... + k_n, k_i >= 1, of sum phi[k_i];
/// phi[0] at k = 0. Enumerates the 2^(k-1) cut sets of each k.
inline std::vector<double> composition_min(const std::vector<double>& phi) {
  const std::size_t n = phi.size();
  std::vector<double> out(n);
  out[0] = phi[0];
  for (std::size_t k = 1; k < n; ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (k - 1)); ++cuts) {
      double sum = 0.0;
      std::size_t last = 0;
      for (std::size_t pos = 1; pos < k; ++pos) {
        if (cuts & (std::uint64_t{1} << (pos - 1))) {
          sum += phi[pos - last];
          last = pos;
        }
      }
      sum += phi[k - last];
      best = std::min(best, sum);
    }
    out[k] = best;
  }
  return out;
}

/// Enumerates signed step count vectors c_1..c_{N-1} (c_j copies of +j if
/// positive, |c_j| copies of -j if negative) with total cost at most `budget`,
/// and returns min cost per reachable |target| < N. A multiset holding both +j
/// and -j is never better than the one without the pair, except at target 0
/// where {+j, -j} is the cheapest way to stay nonempty; those and the single
/// zero step (phi[0]) are added directly. Every phi[j], j >= 1, must be
/// positive or the search does not terminate.
inline std::vector<double> signed_multiset_min(const std::vector<double>& phi, double budget) {
  const long long n = static_cast<long long>(phi.size());
  std::vector<double> best(phi.size(), std::numeric_limits<double>::infinity());
  best[0] = phi[0];
  for (long long j = 1; j < n; ++j) best[0] = std::min(best[0], 2.0 * phi[static_cast<std::size_t>(j)]);
  std::function<void(long long, long long, double, bool)> rec =
      [&](long long j, long long target, double cost, bool nonempty) {
        if (j == n) {
          if (nonempty && std::llabs(target) < n) {
            auto& b = best[static_cast<std::size_t>(std::llabs(target))];
            b = std::min(b, cost);
          }
          return;
        }
        rec(j + 1, target, cost, nonempty);
        for (int sign : {+1, -1}) {
          double c = cost;
          long long t = target;
          for (;;) {
            c += phi[static_cast<std::size_t>(j)];
            t += sign * j;
            if (c > budget) break;
            rec(j + 1, t, c, true);
          }
        }
      };
  rec(1, 0, 0.0, false);
  return best;
}

/// Max of sum(|f[t_i]-f[t_{i-1}]| - phi[t_i-t_{i-1}]) over all partitions of
/// [start, end] through grid nodes (2^(end-start-1) subsets).
inline double partition_max(const std::vector<double>& f, const std::vector<double>& phi,
                            std::size_t start, std::size_t end) {
  const std::size_t inner = end - start - 1;
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
    double sum = 0.0;
    std::size_t prev = start;
    for (std::size_t k = 0; k < inner; ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        const std::size_t t = start + 1 + k;
        sum += std::abs(f[t] - f[prev]) - phi[t - prev];
        prev = t;
      }
    }
    sum += std::abs(f[end] - f[prev]) - phi[end - prev];
    best = std::max(best, sum);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Direct pairwise checks
// ---------------------------------------------------------------------------

inline bool pairwise_monotone(const std::vector<double>& f, const std::vector<double>& phi,
                              double tol) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i; j < f.size(); ++j) {
      if (f[i] > f[j] + phi[j - i] + tol) return false;
    }
  }
  return true;
}

inline bool pairwise_holder(const std::vector<double>& f, const std::vector<double>& phi,
                            double tol) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      if (std::abs(f[i] - f[j]) > phi[d] + tol) return false;
    }
  }
  return true;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isinf(a[i]) || std::isinf(b[i])) {
      if (a[i] != b[i]) return std::numeric_limits<double>::infinity();
      continue;
    }
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace oracle
