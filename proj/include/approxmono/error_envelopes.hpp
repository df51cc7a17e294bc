#pragma once

// Algebra of error functions: (absolute) subadditivity tests, the largest
// subadditive and absolutely subadditive minorants, and power error functions.

#include <cstddef>

#include "approxmono/grid.hpp"

namespace approxmono {

/// eps * u^p for u > 0 and 0 at u = 0.
struct PowerErrorSpec {
  double epsilon = 1.0;
  double p = 1.0;
};

/// Truncation of the signed-step search behind the absolutely subadditive
/// envelope. Walks are confined to offsets in [-mass_radius, mass_radius].
struct AlphaConfig {
  long long mass_radius = -1;  ///< < 0 selects the default 4*(N-1)
  double tolerance = kDefaultTolerance;

  /// Radius actually used for an error function with `count` offsets.
  long long resolved_radius(std::size_t count) const;
  /// True when the radius is below 2*(N-1), the bound past which the grid
  /// result no longer depends on the radius.
  bool truncates(std::size_t count) const;
};

/// values[0] = 0, values[k] = eps * (k*step)^p. Throws RangeError when a
/// value overflows.
ErrorFn power_error(const PowerErrorSpec& spec, double step, std::size_t count);

/// phi[j+k] <= phi[j] + phi[k] + tol for all j, k >= 0 with j+k < N.
CheckResult is_subadditive(const ErrorFn& phi, double tol = kDefaultTolerance);

/// phi[|j+k|] <= phi[|j|] + phi[|k|] + tol for all signed j, k with
/// |j|, |k|, |j+k| < N.
CheckResult is_absolutely_subadditive(const ErrorFn& phi, double tol = kDefaultTolerance);

/// Largest subadditive minorant on the grid: the minimum over compositions
/// k = k_1 + ... + k_n (k_i >= 1) of sum phi[k_i], with value phi[0] at 0.
ErrorFn subadditive_envelope(const ErrorFn& phi);

/// Largest absolutely subadditive minorant on the grid: the minimum over
/// nonempty multisets of signed steps u_i (1 <= |u_i| <= N-1, or a single
/// zero step) summing to k of sum phi[|u_i|].
///
/// Computed as a shortest path from 0 on the integer nodes [-M, M] with edges
/// +-j of cost phi[j]. Any optimal multiset can be ordered so that its partial
/// sums stay within N-1 of the target, so for M >= 2(N-1) the result is exact;
/// smaller radii give an upper bound that is nonincreasing in M.
/// Throws ConfigError when M < N-1.
ErrorFn absolutely_subadditive_envelope(const ErrorFn& phi, const AlphaConfig& cfg = {});

}  // namespace approxmono
