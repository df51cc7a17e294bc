#include "approxmono/function_envelopes.hpp"

#include <algorithm>
#include <cstdlib>

#include "approxmono/checks.hpp"

namespace approxmono {

namespace {

void require_zero_at_origin(const ErrorFn& phi, const char* op) {
  if (phi[0] != 0.0) {
    throw PreconditionError(std::string(op) + " requires phi(0) = 0");
  }
}

void require_same_grid(const SampledFn& a, const SampledFn& b) {
  if (!a.grid().compatible(b.grid())) {
    throw DimensionError("functions are sampled on different grids");
  }
}

// min_j (f[j] + kernel[|j-i|]) over all j.
std::vector<double> symmetric_inf_convolution(const SampledFn& f, const ErrorFn& kernel) {
  const std::size_t n = f.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = f[i] + kernel[0];
    for (std::size_t j = 0; j < n; ++j) {
      best = std::min(best, f[j] + kernel[j > i ? j - i : i - j]);
    }
    out[i] = best;
  }
  return out;
}

// max_j (f[j] - kernel[|j-i|]) over all j.
std::vector<double> symmetric_sup_deconvolution(const SampledFn& f, const ErrorFn& kernel) {
  const std::size_t n = f.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = f[i] - kernel[0];
    for (std::size_t j = 0; j < n; ++j) {
      best = std::max(best, f[j] - kernel[j > i ? j - i : i - j]);
    }
    out[i] = best;
  }
  return out;
}

ErrorFn alpha_on_grid(const ErrorFn& phi, const Grid& grid, const AlphaConfig& cfg) {
  return absolutely_subadditive_envelope(phi.truncated(grid.count()), cfg);
}

}  // namespace

SampledFn monotone_lower_envelope(const SampledFn& f, const ErrorFn& phi) {
  require_covers(phi, f.grid());
  const ErrorFn sigma = subadditive_envelope(phi.truncated(f.size()));
  const std::size_t n = f.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = f[i];
    for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, f[j] + sigma[j - i]);
    out[i] = best;
  }
  return SampledFn(f.grid(), std::move(out));
}

SampledFn monotone_upper_envelope(const SampledFn& f, const ErrorFn& phi) {
  require_covers(phi, f.grid());
  const ErrorFn sigma = subadditive_envelope(phi.truncated(f.size()));
  const std::size_t n = f.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = f[i];
    for (std::size_t j = 0; j < i; ++j) best = std::max(best, f[j] - sigma[i - j]);
    out[i] = best;
  }
  return SampledFn(f.grid(), std::move(out));
}

SampledFn holder_lower_envelope(const SampledFn& f, const ErrorFn& phi, const AlphaConfig& cfg) {
  require_covers(phi, f.grid());
  require_zero_at_origin(phi, "holder_lower_envelope");
  return SampledFn(f.grid(), symmetric_inf_convolution(f, alpha_on_grid(phi, f.grid(), cfg)));
}

SampledFn holder_upper_envelope(const SampledFn& f, const ErrorFn& phi, const AlphaConfig& cfg) {
  require_covers(phi, f.grid());
  require_zero_at_origin(phi, "holder_upper_envelope");
  return SampledFn(f.grid(), symmetric_sup_deconvolution(f, alpha_on_grid(phi, f.grid(), cfg)));
}

SandwichResult monotone_sandwich(const SampledFn& g, const SampledFn& h, const ErrorFn& phi,
                                 double tol) {
  require_same_grid(g, h);
  require_covers(phi, g.grid());
  require_zero_at_origin(phi, "monotone_sandwich");
  const ErrorFn sigma = subadditive_envelope(phi.truncated(g.size()));
  const std::size_t n = g.size();

  SandwichResult result;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double rhs = h[j] + sigma[j - i];
      if (g[i] > rhs + tol && (!result.witness || g[i] - rhs > worst)) {
        worst = g[i] - rhs;
        result.witness = Witness{WitnessKind::sandwich_violation,
                                 {static_cast<long long>(i), static_cast<long long>(j)},
                                 g[i], rhs};
      }
    }
  }
  if (!result.witness) result.function = monotone_lower_envelope(h, phi);
  return result;
}

SandwichResult holder_sandwich(const SampledFn& g, const SampledFn& h, const ErrorFn& phi,
                               const AlphaConfig& cfg, double tol) {
  require_same_grid(g, h);
  require_covers(phi, g.grid());
  require_zero_at_origin(phi, "holder_sandwich");
  const ErrorFn alpha = alpha_on_grid(phi, g.grid(), cfg);
  const std::size_t n = g.size();

  SandwichResult result;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double rhs = h[j] + alpha[j > i ? j - i : i - j];
      if (g[i] > rhs + tol && (!result.witness || g[i] - rhs > worst)) {
        worst = g[i] - rhs;
        result.witness = Witness{WitnessKind::sandwich_violation,
                                 {static_cast<long long>(i), static_cast<long long>(j)},
                                 g[i], rhs};
      }
    }
  }
  if (!result.witness) {
    result.function = SampledFn(h.grid(), symmetric_inf_convolution(h, alpha));
  }
  return result;
}

CheckResult negated_error_is_monotone(const ErrorFn& phi, const ErrorFn& psi, double tol) {
  const std::size_t n = phi.size();
  if (psi.size() < n) throw DimensionError("psi has fewer offsets than phi");
  CheckResult result;
  double worst = 0.0;
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      // -phi[a] <= -phi[b] + psi[b-a]
      const double rhs = phi[a] + psi[b - a];
      if (phi[b] > rhs + tol && (!result.witness || phi[b] - rhs > worst)) {
        worst = phi[b] - rhs;
        result.witness = Witness{WitnessKind::monotone_violation,
                                 {static_cast<long long>(a), static_cast<long long>(b)},
                                 phi[b], rhs};
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

CheckResult symmetric_error_is_holder(const ErrorFn& phi, const ErrorFn& psi, double tol) {
  const std::size_t n = phi.size();
  if (psi.size() < n) throw DimensionError("psi has fewer offsets than phi");
  CheckResult result;
  double worst = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      double slack = psi[u > v ? u - v : v - u];
      if (u + v < n) slack = std::min(slack, psi[u + v]);
      const double rhs = phi[v] + slack;
      if (phi[u] > rhs + tol && (!result.witness || phi[u] - rhs > worst)) {
        worst = phi[u] - rhs;
        result.witness = Witness{WitnessKind::holder_violation,
                                 {static_cast<long long>(u), static_cast<long long>(v)},
                                 phi[u], rhs};
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

BracketResult monotone_bracket(const SampledFn& f, const ErrorFn& phi, const ErrorFn& psi,
                               double tol) {
  require_covers(phi, f.grid());
  require_covers(psi, f.grid());
  const std::size_t n = f.size();
  const ErrorFn phi_n = phi.truncated(n);

  BracketResult result;
  if (auto member = is_phi_monotone(f, phi_n, tol); !member) {
    result.failure = BracketFailure::function_not_member;
    result.witness = member.witness;
    return result;
  }
  if (auto coupling = negated_error_is_monotone(phi_n, psi.truncated(n), tol); !coupling) {
    result.failure = BracketFailure::error_hypothesis;
    result.witness = coupling.witness;
    return result;
  }

  const ErrorFn sigma = subadditive_envelope(phi_n);
  std::vector<double> lower(n), upper(n);
  lower[0] = f[0];
  for (std::size_t i = 1; i < n; ++i) {
    double best = f[0] - sigma[i];
    for (std::size_t j = 1; j < i; ++j) best = std::max(best, f[j] - sigma[i - j]);
    lower[i] = best;
  }
  upper[n - 1] = f[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double best = f[n - 1] + sigma[n - 1 - i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) best = std::min(best, f[j] + sigma[j - i]);
    upper[i] = best;
  }
  result.bracket = BracketPair{SampledFn(f.grid(), std::move(lower)),
                               SampledFn(f.grid(), std::move(upper)), {}};
  return result;
}

BracketResult holder_bracket(const SampledFn& f, const ErrorFn& phi, const ErrorFn& psi,
                             const AlphaConfig& cfg, double tol) {
  require_covers(phi, f.grid());
  require_covers(psi, f.grid());
  const std::size_t n = f.size();
  const ErrorFn phi_n = phi.truncated(n);

  BracketResult result;
  if (auto member = is_phi_holder(f, phi_n, tol); !member) {
    result.failure = BracketFailure::function_not_member;
    result.witness = member.witness;
    return result;
  }
  if (auto coupling = symmetric_error_is_holder(phi_n, psi.truncated(n), tol); !coupling) {
    result.failure = BracketFailure::error_hypothesis;
    result.witness = coupling.witness;
    return result;
  }
  const ErrorFn alpha = absolutely_subadditive_envelope(phi_n, cfg);
  if (auto member = is_phi_holder(f, alpha, tol); !member) {
    result.failure = BracketFailure::function_not_member;
    result.witness = member.witness;
    return result;
  }

  std::vector<double> gap(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = 2.0 * phi_n[0];
    for (std::size_t j = 0; j < n; ++j) best = std::min(best, 2.0 * phi_n[j > i ? j - i : i - j]);
    gap[i] = best;
  }
  result.bracket = BracketPair{SampledFn(f.grid(), symmetric_sup_deconvolution(f, alpha)),
                               SampledFn(f.grid(), symmetric_inf_convolution(f, alpha)),
                               std::move(gap)};
  return result;
}

}  // namespace approxmono
