#pragma once

// Phi-variation of sampled functions and the Jordan-type decomposition into
// two Phi-monotone parts.

#include <cstddef>
#include <utility>
#include <vector>

#include "approxmono/grid.hpp"

namespace approxmono {

/// Strictly increasing grid indices t_0 < ... < t_n (n >= 1).
class Partition {
 public:
  explicit Partition(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t front() const noexcept { return indices_.front(); }
  std::size_t back() const noexcept { return indices_.back(); }

 private:
  std::vector<std::size_t> indices_;
};

/// sum_i (|f(t_i) - f(t_{i-1})| - phi(t_i - t_{i-1})).
double phi_variation(const SampledFn& f, const Partition& tau, const ErrorFn& phi);

/// Total Phi-variation V_[t_start, t_i] f for start <= i <= end, maximized
/// over all partitions through grid nodes. Values may be negative.
class VariationTable {
 public:
  VariationTable(Grid grid, std::size_t start, std::vector<double> prefix);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t start_index() const noexcept { return start_; }
  std::size_t end_index() const noexcept { return start_ + prefix_.size() - 1; }
  /// prefix()[k] is the variation over [t_start, t_{start+k}].
  const std::vector<double>& prefix() const noexcept { return prefix_; }
  /// Variation over [t_start, t_i] for a grid index i.
  double at(std::size_t i) const;

 private:
  Grid grid_;
  std::size_t start_;
  std::vector<double> prefix_;
};

/// V[start] = 0, V[i] = max_{start <= j < i} (V[j] + |f[i]-f[j]| - phi[i-j]).
VariationTable total_phi_variation(const SampledFn& f, const ErrorFn& phi,
                                   std::size_t start, std::size_t end);

/// True iff the total (phi + tol)-variation is <= 0 on every grid interval.
/// Folding the tolerance into each term keeps the answer identical to
/// is_phi_holder(f, phi, tol). O(N^3).
bool is_holder_via_variation(const SampledFn& f, const ErrorFn& phi,
                             double tol = kDefaultTolerance);

/// f = g - h on the nodes anchor..N-1, with
///   g = (V^{2 phi}_[a, x] f + f(x)) / 2,  h = (V^{2 phi}_[a, x] f - f(x)) / 2.
/// Both parts are Phi-monotone. They live on the tail grid starting at the anchor.
struct JordanPair {
  SampledFn g;
  SampledFn h;
  std::size_t anchor;
};

JordanPair jordan_decompose(const SampledFn& f, const ErrorFn& phi, std::size_t anchor = 0);

/// For f = gq - hq: V = total 2*max(phi, psi)-variation of f over the whole
/// grid and B = gq[N-1] - gq[0] + hq[N-1] - hq[0]. V <= B whenever gq is
/// phi-monotone and hq is psi-monotone.
struct VariationBound {
  double variation;
  double bound;
};

/// Throws PreconditionError if gq or hq fails its membership check.
VariationBound delta_variation_bound(const SampledFn& gq, const SampledFn& hq,
                                     const ErrorFn& phi, const ErrorFn& psi,
                                     double tol = kDefaultTolerance);

}  // namespace approxmono
