#include "approxmono/variation.hpp"

#include <algorithm>
#include <cmath>

#include "approxmono/checks.hpp"

namespace approxmono {

Partition::Partition(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.size() < 2) throw ConstructionError("partition needs at least 2 nodes");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw ConstructionError("partition indices must be strictly increasing");
    }
  }
}

double phi_variation(const SampledFn& f, const Partition& tau, const ErrorFn& phi) {
  require_covers(phi, f.grid());
  if (tau.back() >= f.size()) throw DimensionError("partition leaves the grid");
  const auto& t = tau.indices();
  double sum = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    sum += std::abs(f[t[i]] - f[t[i - 1]]) - phi[t[i] - t[i - 1]];
  }
  return sum;
}

VariationTable::VariationTable(Grid grid, std::size_t start, std::vector<double> prefix)
    : grid_(grid), start_(start), prefix_(std::move(prefix)) {
  if (prefix_.empty() || start_ + prefix_.size() > grid_.count()) {
    throw DimensionError("variation table does not fit its grid");
  }
}

double VariationTable::at(std::size_t i) const {
  if (i < start_ || i > end_index()) throw DimensionError("index outside the variation table");
  return prefix_[i - start_];
}

namespace {

// Shared DP; `slack` is added to every phi term.
std::vector<double> variation_prefix(const SampledFn& f, const ErrorFn& phi, std::size_t start,
                                     std::size_t end, double slack) {
  std::vector<double> v(end - start + 1);
  v[0] = 0.0;
  for (std::size_t i = start + 1; i <= end; ++i) {
    double best = v[0] + (std::abs(f[i] - f[start]) - (phi[i - start] + slack));
    for (std::size_t j = start + 1; j < i; ++j) {
      best = std::max(best, v[j - start] + (std::abs(f[i] - f[j]) - (phi[i - j] + slack)));
    }
    v[i - start] = best;
  }
  return v;
}

}  // namespace

VariationTable total_phi_variation(const SampledFn& f, const ErrorFn& phi, std::size_t start,
                                   std::size_t end) {
  require_covers(phi, f.grid());
  if (start >= end || end >= f.size()) {
    throw DimensionError("variation range must satisfy start < end < N");
  }
  return VariationTable(f.grid(), start, variation_prefix(f, phi, start, end, 0.0));
}

bool is_holder_via_variation(const SampledFn& f, const ErrorFn& phi, double tol) {
  require_covers(phi, f.grid());
  const std::size_t n = f.size();
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const auto v = variation_prefix(f, phi, a, n - 1, tol);
    if (std::any_of(v.begin() + 1, v.end(), [](double x) { return x > 0.0; })) return false;
  }
  return true;
}

JordanPair jordan_decompose(const SampledFn& f, const ErrorFn& phi, std::size_t anchor) {
  require_covers(phi, f.grid());
  const std::size_t n = f.size();
  if (anchor + 1 >= n) throw DimensionError("anchor must have at least one node to its right");
  const ErrorFn doubled = phi.truncated(n).scaled(2.0);
  const auto v = variation_prefix(f, doubled, anchor, n - 1, 0.0);

  std::vector<double> g(v.size()), h(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double fx = f[anchor + k];
    g[k] = 0.5 * (v[k] + fx);
    h[k] = 0.5 * (v[k] - fx);
  }
  const Grid tail = f.grid().tail(anchor);
  return JordanPair{SampledFn(tail, std::move(g)), SampledFn(tail, std::move(h)), anchor};
}

VariationBound delta_variation_bound(const SampledFn& gq, const SampledFn& hq,
                                     const ErrorFn& phi, const ErrorFn& psi, double tol) {
  if (!gq.grid().compatible(hq.grid())) throw DimensionError("gq and hq are on different grids");
  const std::size_t n = gq.size();
  require_covers(phi, gq.grid());
  require_covers(psi, gq.grid());
  if (auto r = is_phi_monotone(gq, phi, tol); !r) {
    throw HypothesisError("gq is not phi-monotone", *r.witness);
  }
  if (auto r = is_phi_monotone(hq, psi, tol); !r) {
    throw HypothesisError("hq is not psi-monotone", *r.witness);
  }

  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = gq[i] - hq[i];
  const SampledFn f(gq.grid(), std::move(diff));
  const ErrorFn weight = pointwise_max(phi.truncated(n), psi.truncated(n)).scaled(2.0);
  const auto table = total_phi_variation(f, weight, 0, n - 1);
  return VariationBound{table.prefix().back(), gq[n - 1] - gq[0] + hq[n - 1] - hq[0]};
}

}  // namespace approxmono
