#include "approxmono/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "approxmono/checks.hpp"
#include "approxmono/csv_io.hpp"
#include "approxmono/function_envelopes.hpp"
#include "approxmono/individual_errors.hpp"
#include "approxmono/variation.hpp"

namespace approxmono::cli {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Error specs
// ---------------------------------------------------------------------------

ErrorSpec parse_error_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConstructionError("error spec '" + std::string(text) +
                            "' must be power:<eps>,<p>, const:<c> or file:<path>");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  try {
    if (kind == "power") {
      const auto comma = body.find(',');
      if (comma == std::string_view::npos) throw std::invalid_argument("missing ','");
      PowerErrorSpec spec{parse_real(body.substr(0, comma)), parse_real(body.substr(comma + 1))};
      if (!std::isfinite(spec.epsilon) || spec.epsilon < 0.0 || !std::isfinite(spec.p)) {
        throw std::invalid_argument("need finite eps >= 0 and finite p");
      }
      return spec;
    }
    if (kind == "const") {
      const double c = parse_real(body);
      if (!std::isfinite(c) || c < 0.0) throw std::invalid_argument("need finite c >= 0");
      return ConstantError{c};
    }
    if (kind == "file") {
      if (body.empty()) throw std::invalid_argument("empty path");
      return TableError{std::string(body)};
    }
  } catch (const std::invalid_argument& e) {
    throw ConstructionError("bad error spec '" + std::string(text) + "': " + e.what());
  }
  throw ConstructionError("unknown error spec kind '" + std::string(kind) + "'");
}

ErrorFn resolve_error_spec(const ErrorSpec& spec, const Grid& grid) {
  const std::size_t n = grid.count();
  if (const auto* p = std::get_if<PowerErrorSpec>(&spec)) {
    return power_error(*p, grid.step(), n);
  }
  if (const auto* c = std::get_if<ConstantError>(&spec)) {
    return ErrorFn(grid.step(), std::vector<double>(n, c->value));
  }
  const auto& table = std::get<TableError>(spec);
  std::ifstream in(table.path, std::ios::binary);
  if (!in) throw ConstructionError("cannot open error table '" + table.path + "'");
  ErrorFn phi = read_error_csv(in);
  require_covers(phi, grid);
  return phi.truncated(n);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

json witness_json(const Witness& w) {
  return json{{"kind", std::string(to_string(w.kind))},
              {"indices", w.indices},
              {"lhs", w.lhs},
              {"rhs", w.rhs}};
}

json report_json(const RunReport& r) {
  json inputs = json::array();
  for (const auto& in : r.inputs) inputs.push_back({{"path", in.path}, {"sha256", in.sha256}});
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  return json{{"command", r.command},   {"inputs", inputs},
              {"parameters", r.parameters}, {"witnesses", witnesses},
              {"outputs", r.outputs},   {"metadata", r.metadata}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return hex.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConstructionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Result payloads
// ---------------------------------------------------------------------------

/// One two-column table of the result (a sampled function or an error function).
struct Part {
  std::string name;  // empty for single-part results
  std::string x_header;
  std::string y_header;
  std::vector<double> x;
  std::vector<double> y;
};

Part function_part(std::string name, const SampledFn& f) {
  Part p{std::move(name), "t", "value", {}, f.values()};
  for (std::size_t i = 0; i < f.size(); ++i) p.x.push_back(f.grid().node(i));
  return p;
}

Part error_part(std::string name, const ErrorFn& phi) {
  Part p{std::move(name), "u", "phi", {}, phi.values()};
  for (std::size_t k = 0; k < phi.size(); ++k) p.x.push_back(static_cast<double>(k) * phi.step());
  return p;
}

void write_part_csv(std::ostream& out, const Part& p) {
  out << p.x_header << ',' << p.y_header << '\n';
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    out << format_real(p.x[i]) << ',' << format_real(p.y[i]) << '\n';
  }
}

json part_json(const Part& p) { return json{{p.x_header, p.x}, {p.y_header, p.y}}; }

std::string part_path(const std::string& output, const std::string& name) {
  if (name.empty()) return output;
  const std::string ext = ".csv";
  if (output.size() > ext.size() && output.compare(output.size() - ext.size(), ext.size(), ext) == 0) {
    return output.substr(0, output.size() - ext.size()) + "." + name + ext;
  }
  return output + "." + name + ext;
}

struct Payload {
  std::vector<Part> parts;
  std::optional<std::pair<std::string, bool>> verdict;  // (mode, holds) for `check`
};

// ---------------------------------------------------------------------------
// Options
// ---------------------------------------------------------------------------

struct Options {
  std::string command;
  std::string input;
  std::string upper;
  std::string error;
  std::string error2 = "const:0";
  std::optional<double> tolerance;
  std::optional<long long> mass_radius;
  long long anchor = 0;
  std::string format = "csv";
  std::string output;
  std::string mode;
  std::string kind;
};

double resolve_tolerance(const Options& opt) {
  double tol = kDefaultTolerance;
  if (const char* env = std::getenv("APPROXMONO_TOL"); env != nullptr && *env != '\0') {
    try {
      tol = parse_real(env);
    } catch (const std::invalid_argument&) {
      throw ConstructionError(std::string("APPROXMONO_TOL is not a number: '") + env + "'");
    }
  }
  if (opt.tolerance) tol = *opt.tolerance;
  if (!std::isfinite(tol) || tol < 0.0) throw ConstructionError("tolerance must be finite and >= 0");
  return tol;
}

class Runner {
 public:
  Runner(const Options& opt, RunReport& report) : opt_(opt), report_(report) {}

  int execute(Payload& payload) {
    tol_ = resolve_tolerance(opt_);
    report_.parameters["tolerance"] = format_real(tol_);
    report_.parameters["format"] = opt_.format;

    const std::string& c = opt_.command;
    if (c == "individual") return individual(payload);

    f_.emplace(load_samples(opt_.input, "--input"));
    if (opt_.error.empty()) throw ConstructionError(c + " requires --error");
    phi_.emplace(load_error(opt_.error, "error"));

    if (c == "check") return check(payload);
    if (c == "envelope-error") return envelope_error(payload);
    if (c == "envelope") return envelope(payload);
    if (c == "sandwich") return sandwich(payload);
    if (c == "bracket") return bracket(payload);
    if (c == "variation") return variation(payload);
    if (c == "jordan") return jordan(payload);
    throw ConstructionError("unknown command '" + c + "'");
  }

 private:
  SampledFn load_samples(const std::string& path, const char* flag) {
    if (path.empty()) throw ConstructionError(opt_.command + " requires " + flag);
    const std::string bytes = read_file(path);
    report_.inputs.push_back({path, sha256_hex(bytes)});
    std::istringstream in(bytes);
    try {
      return read_samples_csv(in);
    } catch (const Error& e) {
      throw ConstructionError(path + ": " + e.what());
    }
  }

  ErrorFn load_error(const std::string& text, const std::string& name) {
    report_.parameters[name] = text;
    const ErrorSpec spec = parse_error_spec(text);
    if (const auto* t = std::get_if<TableError>(&spec)) {
      report_.inputs.push_back({t->path, sha256_hex(read_file(t->path))});
      try {
        return resolve_error_spec(spec, f_->grid());
      } catch (const CsvError& e) {
        throw ConstructionError(t->path + ": " + e.what());
      }
    }
    return resolve_error_spec(spec, f_->grid());
  }

  AlphaConfig alpha_config() {
    AlphaConfig cfg;
    cfg.tolerance = tol_;
    if (opt_.mass_radius) cfg.mass_radius = *opt_.mass_radius;
    const std::size_t n = f_->size();
    const long long m = cfg.resolved_radius(n);
    report_.parameters["mass_radius"] = std::to_string(m);
    report_.metadata["alpha_truncated"] = cfg.truncates(n) ? "true" : "false";
    report_.metadata["alpha_note"] =
        "signed-step walks confined to [-M, M]; exact for M >= 2(N-1), an upper bound otherwise";
    return cfg;
  }

  std::string choose(const std::string& value, const std::string& fallback,
                     std::initializer_list<const char*> allowed, const char* flag) {
    const std::string v = value.empty() ? fallback : value;
    for (const char* a : allowed) {
      if (v == a) {
        report_.parameters[std::string(flag).substr(2)] = v;
        return v;
      }
    }
    throw ConstructionError("invalid " + std::string(flag) + " '" + v + "' for " + opt_.command);
  }

  int fail_with(const Witness& w) {
    report_.witnesses.push_back(w);
    return kExitFalse;
  }

  int check(Payload& payload) {
    const std::string mode = choose(opt_.mode, "holder", {"holder", "monotone"}, "--mode");
    const CheckResult r = mode == "holder" ? is_phi_holder(*f_, *phi_, tol_)
                                           : is_phi_monotone(*f_, *phi_, tol_);
    payload.verdict = {mode, r.holds};
    report_.metadata["boundary_nodes"] = "included";
    return r ? kExitOk : fail_with(*r.witness);
  }

  int envelope_error(Payload& payload) {
    const std::string kind = choose(opt_.kind, "sigma", {"sigma", "alpha"}, "--kind");
    const ErrorFn env = kind == "sigma" ? subadditive_envelope(*phi_)
                                        : absolutely_subadditive_envelope(*phi_, alpha_config());
    payload.parts.push_back(error_part("", env));
    return kExitOk;
  }

  int envelope(Payload& payload) {
    const std::string kind =
        choose(opt_.kind, "monotone-lower",
               {"monotone-lower", "monotone-upper", "holder-lower", "holder-upper"}, "--kind");
    std::optional<SampledFn> env;
    if (kind == "monotone-lower") env.emplace(monotone_lower_envelope(*f_, *phi_));
    if (kind == "monotone-upper") env.emplace(monotone_upper_envelope(*f_, *phi_));
    if (kind == "holder-lower") env.emplace(holder_lower_envelope(*f_, *phi_, alpha_config()));
    if (kind == "holder-upper") env.emplace(holder_upper_envelope(*f_, *phi_, alpha_config()));
    payload.parts.push_back(function_part("", *env));
    return kExitOk;
  }

  int sandwich(Payload& payload) {
    const std::string mode = choose(opt_.mode, "monotone", {"monotone", "holder"}, "--mode");
    const SampledFn h = load_samples(opt_.upper, "--upper");
    const SandwichResult r = mode == "monotone"
                                 ? monotone_sandwich(*f_, h, *phi_, tol_)
                                 : holder_sandwich(*f_, h, *phi_, alpha_config(), tol_);
    if (!r.feasible()) return fail_with(*r.witness);
    payload.parts.push_back(function_part("", *r.function));
    return kExitOk;
  }

  int bracket(Payload& payload) {
    const std::string mode = choose(opt_.mode, "monotone", {"monotone", "holder"}, "--mode");
    const ErrorFn psi = load_error(opt_.error2, "error2");
    const BracketResult r = mode == "monotone"
                                ? monotone_bracket(*f_, *phi_, psi, tol_)
                                : holder_bracket(*f_, *phi_, psi, alpha_config(), tol_);
    if (mode == "monotone") {
      report_.metadata["boundary_convention"] =
          "lower[0] = f[0] and upper[N-1] = f[N-1]; Psi-monotonicity holds on interior nodes";
    }
    if (!r.ok()) {
      report_.metadata["failure"] = r.failure == BracketFailure::function_not_member
                                        ? "function_not_member"
                                        : "error_hypothesis";
      return fail_with(*r.witness);
    }
    payload.parts.push_back(function_part("lower", r.bracket->lower));
    payload.parts.push_back(function_part("upper", r.bracket->upper));
    if (!r.bracket->gap_bound.empty()) {
      payload.parts.push_back(function_part("gap_bound", SampledFn(f_->grid(), r.bracket->gap_bound)));
    }
    return kExitOk;
  }

  std::size_t anchor_index() {
    if (opt_.anchor < 0 || static_cast<std::size_t>(opt_.anchor) + 1 >= f_->size()) {
      throw ConstructionError("--anchor must leave at least one node to its right");
    }
    report_.parameters["anchor"] = std::to_string(opt_.anchor);
    return static_cast<std::size_t>(opt_.anchor);
  }

  int variation(Payload& payload) {
    const std::size_t start = anchor_index();
    const VariationTable table = total_phi_variation(*f_, *phi_, start, f_->size() - 1);
    payload.parts.push_back(function_part("", SampledFn(f_->grid().tail(start), table.prefix())));
    report_.metadata["partitions"] = "grid nodes only";
    return kExitOk;
  }

  int jordan(Payload& payload) {
    const JordanPair pair = jordan_decompose(*f_, *phi_, anchor_index());
    payload.parts.push_back(function_part("g", pair.g));
    payload.parts.push_back(function_part("h", pair.h));
    report_.metadata["domain"] = "nodes at or right of the anchor";
    return kExitOk;
  }

  int individual(Payload& payload) {
    f_.emplace(load_samples(opt_.input, "--input"));
    const std::string kind = choose(opt_.kind, "sigma", {"sigma", "alpha"}, "--kind");
    if (kind == "sigma") {
      payload.parts.push_back(error_part("", individual_sigma(*f_)));
    } else {
      payload.parts.push_back(error_part("", individual_alpha(*f_)));
      report_.metadata["absolute_subadditivity"] =
          "not asserted on a finite grid; plain subadditivity holds";
    }
    return kExitOk;
  }

  const Options& opt_;
  RunReport& report_;
  double tol_ = kDefaultTolerance;
  std::optional<SampledFn> f_;
  std::optional<ErrorFn> phi_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConstructionError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ConstructionError("write to '" + path + "' failed");
}

void emit(const Options& opt, RunReport& report, const Payload& payload, std::ostream& out) {
  if (opt.format == "json") {
    if (!opt.output.empty()) report.outputs.push_back(opt.output);
    json result = json::object();
    if (payload.verdict) {
      result = json{{"mode", payload.verdict->first}, {"holds", payload.verdict->second}};
    } else if (payload.parts.size() == 1 && payload.parts[0].name.empty()) {
      result = part_json(payload.parts[0]);
    } else {
      for (const auto& p : payload.parts) result[p.name] = part_json(p);
    }
    const std::string text = json{{"report", report_json(report)}, {"result", result}}.dump(2) + "\n";
    if (opt.output.empty()) {
      out << text;
    } else {
      write_text(opt.output, text);
    }
    return;
  }

  std::vector<std::pair<std::string, std::string>> files;  // (path, contents)
  if (payload.verdict) {
    std::ostringstream s;
    s << "mode,holds\n" << payload.verdict->first << ',' << (payload.verdict->second ? "true" : "false") << '\n';
    files.emplace_back(opt.output, s.str());
  }
  for (const auto& p : payload.parts) {
    std::ostringstream s;
    write_part_csv(s, p);
    files.emplace_back(opt.output.empty() ? std::string() : part_path(opt.output, p.name), s.str());
  }

  if (opt.output.empty()) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string& name = payload.parts.size() > 1 ? payload.parts[i].name : std::string();
      if (!name.empty()) out << (i > 0 ? "\n" : "") << "# " << name << '\n';
      out << files[i].second;
    }
    return;
  }
  for (const auto& [path, text] : files) {
    write_text(path, text);
    report.outputs.push_back(path);
  }
  const std::string sidecar = opt.output + ".report.json";
  report.outputs.push_back(sidecar);
  write_text(sidecar, report_json(report).dump(2) + "\n");
}

}  // namespace

std::string report_to_json(const RunReport& report) { return report_json(report).dump(2); }

RunOutcome run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Approximately monotone and Hoelder functions on uniform grids", "approxmono"};
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"check", "Phi-monotone / Phi-Hoelder membership check"},
      {"envelope-error", "subadditive (sigma) or absolutely subadditive (alpha) envelope of Phi"},
      {"envelope", "monotone / Hoelder lower or upper envelope of a function"},
      {"sandwich", "Phi-monotone / Phi-Hoelder function between --input and --upper"},
      {"bracket", "Psi-monotone / Psi-Hoelder bracketing pair of a function"},
      {"variation", "total Phi-variation from the anchor to every node"},
      {"jordan", "decomposition into two Phi-monotone functions"},
      {"individual", "smallest error function of a function (sigma or alpha)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", opt.input, "samples CSV (t,value)");
    sub->add_option("--error", opt.error, "error spec: power:<eps>,<p> | const:<c> | file:<path>");
    sub->add_option("--error2", opt.error2, "second error spec (Psi)");
    sub->add_option("--tolerance", opt.tolerance, "additive tolerance (default 1e-9 or APPROXMONO_TOL)");
    sub->add_option("--mass-radius", opt.mass_radius, "signed-step search radius (default 4(N-1))");
    sub->add_option("--anchor", opt.anchor, "first node of variation / decomposition");
    sub->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", opt.output, "output path (default stdout)");
    sub->add_option("--mode", opt.mode, "monotone | holder");
    sub->add_option("--kind", opt.kind, "variant selector (see README)");
    sub->add_option("--upper", opt.upper, "upper function CSV for sandwich");
    sub->callback([&opt, name = std::string(name)] { opt.command = name; });
  }

  std::vector<const char*> argv{"approxmono"};
  for (const auto& a : args) argv.push_back(a.c_str());

  RunOutcome outcome;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    outcome.exit_code = kExitInputError;
    return outcome;
  }

  outcome.report.command = opt.command;
  try {
    Payload payload;
    Runner runner(opt, outcome.report);
    outcome.exit_code = runner.execute(payload);
    emit(opt, outcome.report, payload, out);
    for (const auto& w : outcome.report.witnesses) {
      err << to_string(w.kind) << " at (";
      for (std::size_t i = 0; i < w.indices.size(); ++i) err << (i ? "," : "") << w.indices[i];
      err << "): " << format_real(w.lhs) << " > " << format_real(w.rhs) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    outcome.exit_code = kExitInputError;
  }
  return outcome;
}

}  // namespace approxmono::cli
