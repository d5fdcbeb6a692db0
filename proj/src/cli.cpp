#include "lcc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lcc/analysis.hpp"
#include "lcc/engines.hpp"
#include "lcc/families.hpp"
#include "lcc/json_io.hpp"

namespace lcc::cli {

namespace {

[[noreturn]] void bad_input(const std::string& what) {
  throw ValidationError(ValidationError::Kind::malformed_input, what);
}

BigInt parse_flag(const std::string& name, const std::string& text) {
  auto value = parse_bigint(text);
  if (!value) bad_input("--" + name + " expects an integer, got '" + text + "'");
  return *value;
}

std::int64_t parse_small_flag(const std::string& name, const std::string& text) {
  auto value = to_i64(parse_flag(name, text));
  if (!value) bad_input("--" + name + " is out of range");
  return *value;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_flag("a", item));
  if (out.empty()) bad_input("--a expects a comma-separated list of integers");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open spec file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad_input("spec file '" + path + "' is not valid JSON: " + e.what());
  }
}

bool has_inline_spec(const CliConfig& config) {
  return config.n || config.q || config.m || config.a || config.b || config.s;
}

FamilyDescriptor family_from_flags(const CliConfig& config) {
  auto family = parse_family(*config.family);
  if (!family) bad_input("unknown family '" + *config.family + "'");
  if (config.a) bad_input("--a cannot be combined with --family");
  FamilyParams params;
  const std::pair<const char*, const std::optional<std::string>*> flags[] = {
      {"n", &config.n}, {"q", &config.q}, {"m", &config.m}, {"b", &config.b}, {"s", &config.s}};
  for (const auto& [name, value] : flags) {
    if (*value) params[name] = parse_flag(name, **value);
  }
  return resolve_family(*family, params);
}

/// The spec and, when it came from a family, the family name.
std::pair<CodeSpec, std::string> resolve_spec(const CliConfig& config) {
  const int sources = int(config.spec_path.has_value()) + int(config.family.has_value()) +
                      int(!config.family && has_inline_spec(config));
  if (sources != 1) {
    bad_input(sources == 0 ? "no spec given: use --spec, --family, or inline --m/--a flags"
                           : "give exactly one spec source (--spec, --family, or inline flags)");
  }
  if (config.family) {
    auto descriptor = family_from_flags(config);
    return {descriptor.resolved, std::string(to_string(descriptor.family))};
  }
  if (config.spec_path) {
    json doc = read_json_file(*config.spec_path);
    if (is_family_request(doc)) {
      auto descriptor = family_request_from_json(doc);
      return {descriptor.resolved, std::string(to_string(descriptor.family))};
    }
    return {code_spec_from_json(doc), ""};
  }
  if (config.s) bad_input("--s is a family parameter; use it with --family");
  if (!config.m || !config.a) bad_input("an inline spec needs at least --m and --a");
  CodeSpec spec;
  spec.a = parse_list(*config.a);
  spec.n = config.n ? parse_small_flag("n", *config.n) : static_cast<std::int64_t>(spec.a.size());
  spec.q = config.q ? parse_small_flag("q", *config.q) : 2;
  spec.m = parse_flag("m", *config.m);
  spec.b = config.b ? parse_flag("b", *config.b) : BigInt(0);
  return {spec, ""};
}

std::uint64_t brute_cap(const CliConfig& config) {
  if (config.brute_cap) return *config.brute_cap;
  if (const char* env = std::getenv("LCC_BRUTE_CAP")) {
    auto value = parse_bigint(env);
    auto cap = value ? to_u64(*value) : std::nullopt;
    if (!cap) bad_input(std::string("LCC_BRUTE_CAP must be a nonnegative integer, got '") + env + "'");
    return *cap;
  }
  return kDefaultBruteCap;
}

EngineOptions engine_options(const CliConfig& config) {
  EngineOptions options;
  options.brute.cap = brute_cap(config);
  options.dft.force = config.force_dft;
  return options;
}

std::string spec_text(const CodeSpec& spec) {
  std::ostringstream out;
  out << "n=" << spec.n << " q=" << spec.q << " m=" << to_decimal(spec.m) << " a=(";
  for (std::size_t i = 0; i < spec.a.size(); ++i) out << (i ? "," : "") << to_decimal(spec.a[i]);
  out << ") b=" << to_decimal(spec.b);
  return out.str();
}

int run_enumerate(const CliConfig& config, std::ostream& out) {
  auto [spec, label] = resolve_spec(config);
  EngineReport report = enumerate(spec, config.engine, engine_options(config));
  const auto& coeffs = report.enumerator.coeffs();
  switch (config.emit) {
    case Emit::json: out << to_json(report).dump() << '\n'; break;
    case Emit::csv:
      out << "weight,count\n";
      for (std::size_t w = 0; w < coeffs.size(); ++w) out << w << ',' << to_decimal(coeffs[w]) << '\n';
      break;
    case Emit::text:
      for (std::size_t w = 0; w < coeffs.size(); ++w) {
        out << "A_" << w << " = " << to_decimal(coeffs[w]) << '\n';
      }
      break;
  }
  return kOk;
}

int run_size(const CliConfig& config, std::ostream& out) {
  auto [spec, label] = resolve_spec(config);
  BigInt size = code_size(spec, config.engine, engine_options(config));
  switch (config.emit) {
    case Emit::json:
      out << json{{"size", to_decimal(size)}, {"engine", std::string(to_string(config.engine))}}.dump()
          << '\n';
      break;
    case Emit::csv: out << "size\n" << to_decimal(size) << '\n'; break;
    case Emit::text: out << to_decimal(size) << '\n'; break;
  }
  return kOk;
}

int run_sweep(const CliConfig& config, std::ostream& out) {
  if (config.engine != Engine::exact) bad_input("sweep runs on the exact engine only");
  auto [spec, label] = resolve_spec(config);
  SweepResult sweep = sweep_b(spec);
  sweep.label = label;
  switch (config.emit) {
    case Emit::json: out << to_json(sweep).dump() << '\n'; break;
    case Emit::csv: out << to_csv(sweep); break;
    case Emit::text:
      for (const auto& row : sweep.rows) {
        out << "b=" << row.b << " size=" << to_decimal(row.size) << " coeffs=";
        for (std::size_t w = 0; w < row.enumerator.coeffs().size(); ++w) {
          out << (w ? "," : "") << to_decimal(row.enumerator[w]);
        }
        out << '\n';
      }
      break;
  }
  return kOk;
}

int run_check(const CliConfig& config, std::ostream& out) {
  auto [spec, label] = resolve_spec(config);
  CrossCheckReport check = cross_check(spec, config.engines, engine_options(config));
  switch (config.emit) {
    case Emit::json: out << to_json(check).dump() << '\n'; break;
    case Emit::csv:
      out << "engine,residual," << "agree\n";
      for (const auto& r : check.reports) {
        out << to_string(r.engine) << ',' << r.residual << ',' << (check.agree ? 1 : 0) << '\n';
      }
      break;
    case Emit::text:
      if (check.agree) {
        out << "AGREE\n";
      } else {
        out << "DISAGREE " << to_string(check.disagreeing->first) << " vs "
            << to_string(check.disagreeing->second) << " at weight " << *check.first_difference
            << '\n';
      }
      break;
  }
  return check.agree ? kOk : kEngineFailure;
}

int run_family(const CliConfig& config, std::ostream& out) {
  if (!config.family && !config.spec_path) bad_input("family needs --family or a --spec request file");
  auto [spec, label] = resolve_spec(config);
  switch (config.emit) {
    case Emit::json: out << to_json(spec).dump() << '\n'; break;
    case Emit::csv: {
      out << "n,q,m,b";
      for (std::size_t i = 1; i <= spec.a.size(); ++i) out << ",a_" << i;
      out << '\n' << spec.n << ',' << spec.q << ',' << to_decimal(spec.m) << ',' << to_decimal(spec.b);
      for (const auto& coeff : spec.a) out << ',' << to_decimal(coeff);
      out << '\n';
      break;
    }
    case Emit::text: out << label << ": " << spec_text(spec) << '\n'; break;
  }
  return kOk;
}

void add_spec_options(CLI::App& sub, CliConfig& config) {
  sub.add_option("--spec", config.spec_path, "JSON file holding a code spec or family request");
  sub.add_option("--family", config.family,
                 "vt|levenshtein|helberg|le_nguyen|construction_cprime|cse|ternary_integer");
  sub.add_option("--n", config.n, "code length");
  sub.add_option("--q", config.q, "alphabet size");
  sub.add_option("--m", config.m, "modulus");
  sub.add_option("--a", config.a, "comma-separated coefficients a_1,...,a_n");
  sub.add_option("--b", config.b, "defining residue");
  sub.add_option("--s", config.s, "family parameter s");
  sub.add_option("--emit", config.emit, "json|csv|text")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Emit>{{"json", Emit::json}, {"csv", Emit::csv}, {"text", Emit::text}}));
}

const auto kEngineCheck = CLI::IsMember({"exact", "dft", "brute"});

void add_engine_options(CLI::App& sub, CliConfig& config, std::string& engine) {
  sub.add_option("--engine", engine, "exact|dft|brute")->check(kEngineCheck);
  sub.add_flag("--force-dft", config.force_dft, "skip the dft precision envelope check");
  sub.add_option("--brute-cap", config.brute_cap, "brute-force enumeration cap (vectors)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Weight enumerators and sizes of linear-congruence codes", "lcc"};
  app.require_subcommand(1);
  std::string engine_name = "exact";
  std::vector<std::string> engine_list;

  struct Entry {
    const char* name;
    const char* help;
    Subcommand subcommand;
  };
  const Entry entries[] = {
      {"enumerate", "weight enumerator A_0..A_n", Subcommand::enumerate},
      {"size", "number of codewords", Subcommand::size},
      {"sweep", "enumerators for every residue b", Subcommand::sweep},
      {"check", "compare engines on one spec", Subcommand::check},
      {"family", "resolve a code family to its spec", Subcommand::family},
  };
  for (const auto& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    add_spec_options(*sub, config);
    if (entry.subcommand != Subcommand::family) add_engine_options(*sub, config, engine_name);
    if (entry.subcommand == Subcommand::check) {
      sub->add_option("--engines", engine_list, "comma-separated engines to compare")
          ->delimiter(',')
          ->check(kEngineCheck);
    }
    const Subcommand which = entry.subcommand;
    sub->callback([&config, which] { config.subcommand = which; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kInvalidInput;
  }
  config.engine = *parse_engine(engine_name);
  if (!engine_list.empty()) {
    config.engines.clear();
    for (const auto& name : engine_list) config.engines.push_back(*parse_engine(name));
  }

  try {
    switch (config.subcommand) {
      case Subcommand::enumerate: return run_enumerate(config, out);
      case Subcommand::size: return run_size(config, out);
      case Subcommand::sweep: return run_sweep(config, out);
      case Subcommand::check: return run_check(config, out);
      case Subcommand::family: return run_family(config, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const EngineError& e) {
    err << "error: " << e.what() << '\n';
    return kEngineFailure;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kEngineFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kEngineFailure;
  }
  return kOk;
}

}  // namespace lcc::cli
