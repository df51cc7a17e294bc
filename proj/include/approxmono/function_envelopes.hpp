#pragma once

// Phi-monotone and Phi-Hoelder envelopes of sampled functions, sandwich
// construction between two functions, and bracketing pairs.

#include <optional>
#include <vector>

#include "approxmono/error_envelopes.hpp"
#include "approxmono/grid.hpp"

namespace approxmono {

/// Largest Phi-monotone minorant: out[i] = min(f[i], min_{j > i} (f[j] + phi_sigma[j-i])).
/// phi(0) plays no role since the defining inequality is trivial for x = y.
SampledFn monotone_lower_envelope(const SampledFn& f, const ErrorFn& phi);

/// Smallest Phi-monotone majorant: out[i] = max(f[i], max_{j < i} (f[j] - phi_sigma[i-j])).
SampledFn monotone_upper_envelope(const SampledFn& f, const ErrorFn& phi);

/// Largest Phi-Hoelder minorant: out[i] = min_j (f[j] + phi_alpha[|j-i|]).
/// Requires phi[0] == 0 (PreconditionError otherwise).
SampledFn holder_lower_envelope(const SampledFn& f, const ErrorFn& phi,
                                const AlphaConfig& cfg = {});

/// Smallest Phi-Hoelder majorant: out[i] = max_j (f[j] - phi_alpha[|j-i|]).
SampledFn holder_upper_envelope(const SampledFn& f, const ErrorFn& phi,
                                const AlphaConfig& cfg = {});

/// Either a function squeezed between g and h, or the pair (i, j) where the
/// feasibility inequality fails worst.
struct SandwichResult {
  std::optional<SampledFn> function;
  std::optional<Witness> witness;

  bool feasible() const noexcept { return function.has_value(); }
};

/// A Phi-monotone f with g <= f <= h exists iff
/// g[i] <= h[j] + phi_sigma[j-i] for all i <= j; f is then the lower
/// monotone envelope of h. Requires phi[0] == 0.
SandwichResult monotone_sandwich(const SampledFn& g, const SampledFn& h, const ErrorFn& phi,
                                 double tol = kDefaultTolerance);

/// Hoelder analogue over all pairs (i, j) with phi_alpha[|j-i|]; f is then the
/// lower Hoelder envelope of h. Requires phi[0] == 0.
SandwichResult holder_sandwich(const SampledFn& g, const SampledFn& h, const ErrorFn& phi,
                               const AlphaConfig& cfg = {}, double tol = kDefaultTolerance);

/// lower <= f <= upper. `gap_bound` is filled by holder_bracket only:
/// gap_bound[i] = min_j 2*phi[|j-i|] bounds upper[i] - lower[i].
struct BracketPair {
  SampledFn lower;
  SampledFn upper;
  std::vector<double> gap_bound;
};

enum class BracketFailure {
  none,
  function_not_member,   ///< f is not Phi-monotone / Phi-Hoelder
  error_hypothesis,      ///< the coupling condition between Phi and Psi fails
};

struct BracketResult {
  std::optional<BracketPair> bracket;
  BracketFailure failure = BracketFailure::none;
  std::optional<Witness> witness;

  bool ok() const noexcept { return bracket.has_value(); }
};

/// Checks phi[b] <= phi[a] + psi[b-a] for 1 <= a <= b < N, i.e. that -phi is
/// psi-monotone on the positive offsets.
CheckResult negated_error_is_monotone(const ErrorFn& phi, const ErrorFn& psi,
                                      double tol = kDefaultTolerance);

/// Checks phi[u] <= phi[v] + min(psi[|v-u|], psi[u+v]) over grid offsets,
/// the psi[u+v] term only where u+v < N. Equivalent to phi(|.|) being
/// psi-Hoelder on the signed offsets of the grid.
CheckResult symmetric_error_is_holder(const ErrorFn& phi, const ErrorFn& psi,
                                      double tol = kDefaultTolerance);

/// Psi-monotone pair around a Phi-monotone f:
///   lower[i] = max_{j<i} (f[j] - phi_sigma[i-j]),  lower[0] = f[0],
///   upper[i] = min_{j>i} (f[j] + phi_sigma[j-i]),  upper[N-1] = f[N-1].
/// The end nodes copy f because the one-sided extrema are empty there; the
/// Psi-monotonicity of the pair is guaranteed on the interior nodes.
BracketResult monotone_bracket(const SampledFn& f, const ErrorFn& phi, const ErrorFn& psi,
                               double tol = kDefaultTolerance);

/// Psi-Hoelder pair around a Phi-Hoelder f:
///   lower[i] = max_j (f[j] - phi_alpha[|j-i|]),
///   upper[i] = min_j (f[j] + phi_alpha[|j-i|]).
/// Besides the stated hypotheses, f must be phi_alpha-Hoelder on the grid
/// (automatic on unbounded domains, checked here).
BracketResult holder_bracket(const SampledFn& f, const ErrorFn& phi, const ErrorFn& psi,
                             const AlphaConfig& cfg = {}, double tol = kDefaultTolerance);

}  // namespace approxmono
