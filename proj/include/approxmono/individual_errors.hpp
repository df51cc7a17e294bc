#pragma once

// Pointwise-smallest error functions under which a given sampled function is
// Phi-monotone (sigma) or Phi-Hoelder (alpha).

#include "approxmono/grid.hpp"

namespace approxmono {

/// max(c, 0).
constexpr double positive_part(double c) noexcept { return c > 0.0 ? c : 0.0; }

/// out[k] = max_i (f[i] - f[i+k])_+ over 0 <= i < N-k; out[0] = 0.
ErrorFn individual_sigma(const SampledFn& f);

/// out[k] = max_i |f[i] - f[i+k]| over 0 <= i < N-k; out[0] = 0.
ErrorFn individual_alpha(const SampledFn& f);

}  // namespace approxmono
