#pragma once

// Membership checks for Phi-monotone / Phi-Hoelder functions and the closure
// operations of those classes (cone combinations, finite sup/inf).

#include <span>
#include <utility>
#include <vector>

#include "approxmono/grid.hpp"

namespace approxmono {

/// f[i] - f[j] <= phi[j-i] + tol for every i <= j.
/// Boundary nodes take part like any other node.
CheckResult is_phi_monotone(const SampledFn& f, const ErrorFn& phi,
                            double tol = kDefaultTolerance);

/// |f[i] - f[j]| <= phi[|i-j|] + tol for every i, j.
CheckResult is_phi_holder(const SampledFn& f, const ErrorFn& phi,
                          double tol = kDefaultTolerance);

enum class ConeMode { monotone, holder };

/// Returns (sum a_i f_i, sum a_i phi_i) in monotone mode (a_i >= 0 required)
/// and (sum a_i f_i, sum |a_i| phi_i) in holder mode.
std::pair<SampledFn, ErrorFn> cone_combine(std::span<const double> coeffs,
                                           std::span<const SampledFn> fns,
                                           std::span<const ErrorFn> errs,
                                           ConeMode mode);

enum class Extremum { sup, inf };

/// Nodewise max (sup) or min (inf) of a nonempty family on one grid.
SampledFn pointwise_extrema(std::span<const SampledFn> fns, Extremum which);

struct SampleRecord {
  double t;
  double v;
};

/// Builds a SampledFn from (t, value) records. Requires at least two records,
/// strictly increasing t with uniform spacing (relative tolerance 1e-9) and
/// finite data; the step is the median spacing. Throws IngestionError naming
/// the offending record.
SampledFn ingest_samples(std::span<const SampleRecord> records);

}  // namespace approxmono
