#include "approxmono/checks.hpp"

#include <algorithm>
#include <cmath>

namespace approxmono {

CheckResult is_phi_monotone(const SampledFn& f, const ErrorFn& phi, double tol) {
  require_covers(phi, f.grid());
  const std::size_t n = f.size();
  CheckResult result;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // Compared as a drop f[i] - f[j] so that f and -f agree with the
      // Hoelder check exactly.
      const double drop = f[i] - f[j];
      if (drop > phi[j - i] + tol) {
        const double excess = drop - phi[j - i];
        if (!result.witness || excess > worst) {
          worst = excess;
          result.witness = Witness{WitnessKind::monotone_violation,
                                   {static_cast<long long>(i), static_cast<long long>(j)},
                                   drop, phi[j - i]};
        }
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

CheckResult is_phi_holder(const SampledFn& f, const ErrorFn& phi, double tol) {
  require_covers(phi, f.grid());
  const std::size_t n = f.size();
  CheckResult result;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Same operation order as the variation route so both agree bit-for-bit.
      const double lhs = std::abs(f[j] - f[i]);
      if (lhs > phi[j - i] + tol) {
        const double excess = lhs - phi[j - i];
        if (!result.witness || excess > worst) {
          worst = excess;
          result.witness = Witness{WitnessKind::holder_violation,
                                   {static_cast<long long>(i), static_cast<long long>(j)},
                                   lhs, phi[j - i]};
        }
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

std::pair<SampledFn, ErrorFn> cone_combine(std::span<const double> coeffs,
                                           std::span<const SampledFn> fns,
                                           std::span<const ErrorFn> errs,
                                           ConeMode mode) {
  if (coeffs.empty() || coeffs.size() != fns.size() || coeffs.size() != errs.size()) {
    throw DimensionError("cone_combine needs equally many coefficients, functions and error functions");
  }
  const Grid& grid = fns.front().grid();
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (!fns[i].grid().compatible(grid)) {
      throw DimensionError("cone_combine: function " + std::to_string(i) + " is on a different grid");
    }
    require_covers(errs[i], grid);
    if (!std::isfinite(coeffs[i])) {
      throw ConstructionError("cone_combine: non-finite coefficient");
    }
    if (mode == ConeMode::monotone && coeffs[i] < 0.0) {
      throw ConstructionError("cone_combine: negative coefficient in monotone mode");
    }
  }

  const std::size_t n = grid.count();
  std::vector<double> values(n, 0.0);
  std::vector<double> phi(n, 0.0);
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const double weight = mode == ConeMode::holder ? std::abs(coeffs[i]) : coeffs[i];
    for (std::size_t k = 0; k < n; ++k) {
      values[k] += coeffs[i] * fns[i][k];
      phi[k] += weight * errs[i][k];
    }
  }
  return {SampledFn(grid, std::move(values)), ErrorFn(grid.step(), std::move(phi))};
}

SampledFn pointwise_extrema(std::span<const SampledFn> fns, Extremum which) {
  if (fns.empty()) throw DimensionError("pointwise_extrema of an empty family");
  const Grid& grid = fns.front().grid();
  std::vector<double> out = fns.front().values();
  for (std::size_t i = 1; i < fns.size(); ++i) {
    if (!fns[i].grid().compatible(grid)) {
      throw DimensionError("pointwise_extrema: function " + std::to_string(i) + " is on a different grid");
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = which == Extremum::sup ? std::max(out[k], fns[i][k])
                                      : std::min(out[k], fns[i][k]);
    }
  }
  return SampledFn(grid, std::move(out));
}

SampledFn ingest_samples(std::span<const SampleRecord> records) {
  if (records.size() < 2) {
    throw IngestionError(records.size(), "need at least 2 samples");
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!std::isfinite(records[i].t)) throw IngestionError(i, "non-finite t");
    if (!std::isfinite(records[i].v)) throw IngestionError(i, "non-finite value");
  }
  std::vector<double> gaps(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double d = records[i].t - records[i - 1].t;
    if (d == 0.0) throw IngestionError(i, "duplicate t");
    if (d < 0.0) throw IngestionError(i, "t is not strictly increasing");
    gaps[i - 1] = d;
  }

  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  const double step = m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);

  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (std::abs(gaps[i] - step) > 1e-9 * step) {
      throw IngestionError(i + 1, "nonuniform spacing (gap " + std::to_string(gaps[i]) +
                                      ", expected " + std::to_string(step) + ")");
    }
  }

  std::vector<double> values(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) values[i] = records[i].v;
  return SampledFn(Grid(records.front().t, step, records.size()), std::move(values));
}

}  // namespace approxmono
