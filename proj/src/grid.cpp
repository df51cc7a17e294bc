#include "approxmono/grid.hpp"

#include <algorithm>
#include <cmath>

namespace approxmono {

namespace {

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

Grid::Grid(double origin, double step, std::size_t count)
    : origin_(origin), step_(step), count_(count) {
  if (!std::isfinite(origin) || !std::isfinite(step)) {
    throw ConstructionError("grid origin and step must be finite");
  }
  if (!(step > 0.0)) {
    throw ConstructionError("grid step must be positive");
  }
  if (count < 2) {
    throw ConstructionError("grid needs at least 2 nodes");
  }
}

bool Grid::compatible(const Grid& other) const noexcept {
  if (count_ != other.count_) return false;
  if (!close_rel(step_, other.step_, 1e-9)) return false;
  return std::abs(origin_ - other.origin_) <= 1e-9 * step_;
}

Grid Grid::tail(std::size_t first) const {
  if (first + 2 > count_) {
    throw ConstructionError("tail grid would have fewer than 2 nodes");
  }
  return Grid(node(first), step_, count_ - first);
}

Grid make_grid(double origin, double step, long long count) {
  if (count < 2) throw ConstructionError("grid needs at least 2 nodes");
  return Grid(origin, step, static_cast<std::size_t>(count));
}

SampledFn::SampledFn(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count()) {
    throw DimensionError("sample count " + std::to_string(values_.size()) +
                         " does not match grid count " +
                         std::to_string(grid_.count()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ConstructionError("non-finite sample at index " + std::to_string(i));
    }
  }
}

SampledFn SampledFn::negated() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [](double v) { return -v; });
  return SampledFn(grid_, std::move(out));
}

SampledFn SampledFn::reversed() const {
  return SampledFn(grid_, std::vector<double>(values_.rbegin(), values_.rend()));
}

ErrorFn::ErrorFn(double step, std::vector<double> values)
    : step_(step), values_(std::move(values)) {
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw ConstructionError("error function step must be positive and finite");
  }
  if (values_.empty()) {
    throw ConstructionError("error function needs at least one offset");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw ConstructionError("non-finite error value at offset " + std::to_string(k));
    }
    if (values_[k] < 0.0) {
      throw ConstructionError("negative error value at offset " + std::to_string(k));
    }
  }
}

ErrorFn ErrorFn::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= factor;
  return ErrorFn(step_, std::move(out));
}

ErrorFn ErrorFn::truncated(std::size_t count) const {
  if (count > values_.size()) {
    throw DimensionError("cannot truncate error function to more offsets than it has");
  }
  return ErrorFn(step_, std::vector<double>(values_.begin(), values_.begin() + count));
}

ErrorFn pointwise_max(const ErrorFn& a, const ErrorFn& b) {
  if (a.size() != b.size() || !close_rel(a.step(), b.step(), 1e-9)) {
    throw DimensionError("error functions live on different offsets");
  }
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(a[k], b[k]);
  return ErrorFn(a.step(), std::move(out));
}

void require_covers(const ErrorFn& phi, const Grid& grid) {
  if (phi.size() < grid.count()) {
    throw DimensionError("error function has " + std::to_string(phi.size()) +
                         " offsets, grid needs " + std::to_string(grid.count()));
  }
  if (!close_rel(phi.step(), grid.step(), 1e-9)) {
    throw DimensionError("error function step does not match grid step");
  }
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::monotone_violation: return "monotone-violation";
    case WitnessKind::holder_violation: return "holder-violation";
    case WitnessKind::subadd_violation: return "subadd-violation";
    case WitnessKind::abs_subadd_violation: return "abs-subadd-violation";
    case WitnessKind::sandwich_violation: return "sandwich-violation";
  }
  return "unknown";
}

}  // namespace approxmono
