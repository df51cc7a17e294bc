#include "approxmono/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "approxmono/checks.hpp"

namespace approxmono {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

namespace {

struct Row {
  std::size_t line;
  double a;
  double b;
};

std::vector<Row> read_two_columns(std::istream& in, std::string_view header) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Row> rows;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!seen_header) {
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);  // UTF-8 BOM
      if (line != header) {
        throw CsvError(lineno, "expected header '" + std::string(header) + "', got '" + line + "'");
      }
      seen_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw CsvError(lineno, "expected exactly 2 fields");
    }
    try {
      const double a = parse_real(std::string_view(line).substr(0, comma));
      const double b = parse_real(std::string_view(line).substr(comma + 1));
      rows.push_back({lineno, a, b});
    } catch (const std::invalid_argument& e) {
      throw CsvError(lineno, e.what());
    }
  }
  if (!seen_header) throw CsvError(1, "empty input, expected header '" + std::string(header) + "'");
  return rows;
}

}  // namespace

SampledFn read_samples_csv(std::istream& in) {
  const auto rows = read_two_columns(in, "t,value");
  std::vector<SampleRecord> records;
  records.reserve(rows.size());
  for (const auto& r : rows) records.push_back({r.a, r.b});
  try {
    return ingest_samples(records);
  } catch (const IngestionError& e) {
    const std::size_t line = e.row() < rows.size() ? rows[e.row()].line : rows.size() + 1;
    throw CsvError(line, e.what());
  }
}

ErrorFn read_error_csv(std::istream& in) {
  const auto rows = read_two_columns(in, "u,phi");
  if (rows.size() < 2) throw CsvError(rows.empty() ? 2 : rows[0].line, "need at least 2 offsets");
  if (rows[0].a != 0.0) throw CsvError(rows[0].line, "first offset must be 0");
  std::vector<SampleRecord> records;
  for (const auto& r : rows) records.push_back({r.a, r.b});
  double step = 0.0;
  try {
    step = ingest_samples(records).grid().step();
  } catch (const IngestionError& e) {
    const std::size_t line = e.row() < rows.size() ? rows[e.row()].line : rows.size() + 1;
    throw CsvError(line, e.what());
  }
  std::vector<double> values;
  for (const auto& r : rows) {
    if (r.b < 0.0) throw CsvError(r.line, "error values must be nonnegative");
    values.push_back(r.b);
  }
  return ErrorFn(step, std::move(values));
}

void write_samples_csv(std::ostream& out, const Grid& grid, std::span<const double> values) {
  out << "t,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << format_real(grid.node(i)) << ',' << format_real(values[i]) << '\n';
  }
}

void write_error_csv(std::ostream& out, const ErrorFn& phi) {
  out << "u,phi\n";
  for (std::size_t k = 0; k < phi.size(); ++k) {
    out << format_real(static_cast<double>(k) * phi.step()) << ',' << format_real(phi[k]) << '\n';
  }
}

}  // namespace approxmono
