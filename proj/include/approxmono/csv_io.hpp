#pragma once

// CSV readers/writers for sampled functions (`t,value`) and error functions
// (`u,phi`). Numbers are written with 17 significant digits.

#include <iosfwd>
#include <span>
#include <string>

#include "approxmono/grid.hpp"

namespace approxmono {

/// Malformed CSV text; `line()` is 1-based.
class CsvError : public Error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// 17 significant digits, locale independent.
std::string format_real(double x);

/// Strict decimal parse of a whole field; throws std::invalid_argument.
double parse_real(std::string_view text);

SampledFn read_samples_csv(std::istream& in);
ErrorFn read_error_csv(std::istream& in);

void write_samples_csv(std::ostream& out, const Grid& grid, std::span<const double> values);
inline void write_samples_csv(std::ostream& out, const SampledFn& f) {
  write_samples_csv(out, f.grid(), f.values());
}
void write_error_csv(std::ostream& out, const ErrorFn& phi);

}  // namespace approxmono
