#include "approxmono/error_envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace approxmono {

long long AlphaConfig::resolved_radius(std::size_t count) const {
  const long long span = static_cast<long long>(count) - 1;
  return mass_radius < 0 ? 4 * span : mass_radius;
}

bool AlphaConfig::truncates(std::size_t count) const {
  return resolved_radius(count) < 2 * (static_cast<long long>(count) - 1);
}

ErrorFn power_error(const PowerErrorSpec& spec, double step, std::size_t count) {
  if (!std::isfinite(spec.epsilon) || spec.epsilon < 0.0) {
    throw ConstructionError("power error: epsilon must be finite and nonnegative");
  }
  if (!std::isfinite(spec.p)) throw ConstructionError("power error: exponent must be finite");
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw ConstructionError("power error: step must be positive");
  }
  if (count < 2) throw ConstructionError("power error: need at least 2 offsets");

  std::vector<double> values(count, 0.0);
  for (std::size_t k = 1; k < count; ++k) {
    const double v = spec.epsilon * std::pow(static_cast<double>(k) * step, spec.p);
    if (!std::isfinite(v)) {
      throw RangeError("power error overflows at offset " + std::to_string(k));
    }
    values[k] = v;
  }
  return ErrorFn(step, std::move(values));
}

CheckResult is_subadditive(const ErrorFn& phi, double tol) {
  const std::size_t n = phi.size();
  CheckResult result;
  double worst = 0.0;
  // j = 0 is implied by phi[0] >= 0.
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = j; j + k < n; ++k) {
      const double rhs = phi[j] + phi[k];
      if (phi[j + k] > rhs + tol) {
        const double excess = phi[j + k] - rhs;
        if (!result.witness || excess > worst) {
          worst = excess;
          result.witness = Witness{WitnessKind::subadd_violation,
                                   {static_cast<long long>(j), static_cast<long long>(k)},
                                   phi[j + k], rhs};
        }
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

CheckResult is_absolutely_subadditive(const ErrorFn& phi, double tol) {
  const long long n = static_cast<long long>(phi.size());
  CheckResult result;
  double worst = 0.0;
  // (j, k) ~ (k, j) ~ (-j, -k): keep j <= k and j + k >= 0.
  for (long long j = -(n - 1); j < n; ++j) {
    for (long long k = std::max(j, -j); k < n && j + k < n; ++k) {
      const double lhs = phi[static_cast<std::size_t>(j + k)];
      const double rhs = phi[static_cast<std::size_t>(std::llabs(j))] +
                         phi[static_cast<std::size_t>(std::llabs(k))];
      if (lhs > rhs + tol) {
        const double excess = lhs - rhs;
        if (!result.witness || excess > worst) {
          worst = excess;
          result.witness = Witness{WitnessKind::abs_subadd_violation, {j, k}, lhs, rhs};
        }
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

ErrorFn subadditive_envelope(const ErrorFn& phi) {
  const std::size_t n = phi.size();
  std::vector<double> env(n);
  env[0] = phi[0];
  for (std::size_t k = 1; k < n; ++k) {
    double best = phi[k];
    for (std::size_t j = 1; 2 * j <= k; ++j) {
      best = std::min(best, env[j] + env[k - j]);
    }
    env[k] = best;
  }
  return ErrorFn(phi.step(), std::move(env));
}

ErrorFn absolutely_subadditive_envelope(const ErrorFn& phi, const AlphaConfig& cfg) {
  const long long n = static_cast<long long>(phi.size());
  const long long radius = cfg.resolved_radius(phi.size());
  if (radius < n - 1) {
    throw ConfigError("mass radius " + std::to_string(radius) +
                      " is below the largest offset " + std::to_string(n - 1));
  }
  if (n == 1) return phi;
  // Past 2(N-1) the search window no longer changes the result.
  const long long m = std::min(radius, 2 * (n - 1));

  const std::size_t nodes = static_cast<std::size_t>(2 * m + 1);
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(nodes, inf);
  std::vector<char> settled(nodes, 0);

  using Entry = std::pair<double, long long>;  // (distance, node index); ties by index
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[static_cast<std::size_t>(m)] = 0.0;
  queue.emplace(0.0, m);

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = 1;
    for (long long j = 1; j < n; ++j) {
      const double w = d + phi[static_cast<std::size_t>(j)];
      if (u + j <= 2 * m) {
        auto& slot = dist[static_cast<std::size_t>(u + j)];
        if (w < slot) {
          slot = w;
          queue.emplace(w, u + j);
        }
      }
      if (u - j >= 0) {
        auto& slot = dist[static_cast<std::size_t>(u - j)];
        if (w < slot) {
          slot = w;
          queue.emplace(w, u - j);
        }
      }
    }
  }

  std::vector<double> env(static_cast<std::size_t>(n));
  // Offset 0: a single zero step, or a nonempty closed walk through 0.
  double closed = phi[0];
  for (long long j = 1; j < n; ++j) {
    const double back = phi[static_cast<std::size_t>(j)];
    closed = std::min(closed, dist[static_cast<std::size_t>(m + j)] + back);
    closed = std::min(closed, dist[static_cast<std::size_t>(m - j)] + back);
  }
  env[0] = closed;
  for (long long k = 1; k < n; ++k) {
    env[static_cast<std::size_t>(k)] = std::min(dist[static_cast<std::size_t>(m + k)],
                                                dist[static_cast<std::size_t>(m - k)]);
  }
  return ErrorFn(phi.step(), std::move(env));
}

}  // namespace approxmono
