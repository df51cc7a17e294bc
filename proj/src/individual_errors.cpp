#include "approxmono/individual_errors.hpp"

#include <algorithm>
#include <cmath>

namespace approxmono {

ErrorFn individual_sigma(const SampledFn& f) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    double best = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) best = std::max(best, positive_part(f[i] - f[i + k]));
    out[k] = best;
  }
  return ErrorFn(f.grid().step(), std::move(out));
}

ErrorFn individual_alpha(const SampledFn& f) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    double best = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) best = std::max(best, std::abs(f[i + k] - f[i]));
    out[k] = best;
  }
  return ErrorFn(f.grid().step(), std::move(out));
}

}  // namespace approxmono
