#pragma once

// Data model shared by every module: uniform grids, sampled functions,
// error functions and violation witnesses.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace approxmono {

/// Default additive slack used by every inequality check.
inline constexpr double kDefaultTolerance = 1e-9;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid grid / function / error-function construction.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Operands live on incompatible grids or offset ranges.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input records rejected while building a SampledFn. `row()` is the
/// zero-based index of the offending record.
class IngestionError : public Error {
 public:
  IngestionError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A computed value overflowed.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invalid algorithm configuration (e.g. truncation radius too small).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation-specific hypothesis does not hold for the given inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Grid
// ---------------------------------------------------------------------------

/// Uniform discretization {origin + i*step : 0 <= i < count} of a compact
/// window of the real line.
class Grid {
 public:
  Grid(double origin, double step, std::size_t count);

  double origin() const noexcept { return origin_; }
  double step() const noexcept { return step_; }
  std::size_t count() const noexcept { return count_; }

  double node(std::size_t i) const noexcept {
    return origin_ + static_cast<double>(i) * step_;
  }
  /// (count - 1) * step, the length of the represented window.
  double length() const noexcept {
    return static_cast<double>(count_ - 1) * step_;
  }

  /// Same node set up to a relative tolerance on origin and step.
  bool compatible(const Grid& other) const noexcept;

  /// The grid made of nodes first, first+1, ..., count-1.
  Grid tail(std::size_t first) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double origin_;
  double step_;
  std::size_t count_;
};

Grid make_grid(double origin, double step, long long count);

// ---------------------------------------------------------------------------
// SampledFn
// ---------------------------------------------------------------------------

/// A real function known through its values on a Grid.
class SampledFn {
 public:
  SampledFn(Grid grid, std::vector<double> values);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  SampledFn negated() const;
  /// Node order reversed (value i moves to N-1-i); the grid is unchanged.
  SampledFn reversed() const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

// ---------------------------------------------------------------------------
// ErrorFn
// ---------------------------------------------------------------------------

/// Nonnegative function on offsets {0, h, ..., (N-1)h}; value k is Phi(k*h).
class ErrorFn {
 public:
  ErrorFn(double step, std::vector<double> values);

  double step() const noexcept { return step_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  ErrorFn scaled(double factor) const;
  /// First `count` offsets.
  ErrorFn truncated(std::size_t count) const;

 private:
  double step_;
  std::vector<double> values_;
};

/// Nodewise max of two error functions on the same offsets.
ErrorFn pointwise_max(const ErrorFn& a, const ErrorFn& b);

/// Throws DimensionError unless `phi` covers every offset of `grid`.
void require_covers(const ErrorFn& phi, const Grid& grid);

// ---------------------------------------------------------------------------
// Witness
// ---------------------------------------------------------------------------

enum class WitnessKind {
  monotone_violation,
  holder_violation,
  subadd_violation,
  abs_subadd_violation,
  sandwich_violation,
};

std::string_view to_string(WitnessKind kind);

/// Index pair (or triple) where a checked inequality lhs <= rhs + tol fails.
/// Indices are grid indices for function checks and (signed) offset indices
/// for error-function checks.
struct Witness {
  WitnessKind kind;
  std::vector<long long> indices;
  double lhs;
  double rhs;

  double excess() const noexcept { return lhs - rhs; }
};

/// Outcome of a membership/inequality check. On failure `witness` carries
/// the maximal violation.
struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// PreconditionError raised by a failed membership hypothesis.
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(const std::string& what, Witness witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

}  // namespace approxmono
