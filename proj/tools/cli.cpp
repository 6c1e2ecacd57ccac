#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ldio/closed_forms.hpp"
#include "ldio/error.hpp"
#include "ldio/expr_io.hpp"

namespace ldio::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::WrongVariable:
      return kParse;
    case Errc::Degenerate:
    case Errc::DegenerateConic:
    case Errc::ZeroV:
    case Errc::LeadingNotSquare:
    case Errc::EmptyOutput:
    case Errc::DenominatorZero:
    case Errc::PoleAtPoint:
      return kDegenerate;
    case Errc::VerificationFailed:
    case Errc::NonzeroRemainder:
    case Errc::NotOnCurve:
    case Errc::TagMismatch:
      return kVerificationFailure;
    default:
      return kUsage;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) parts.push_back(item);
  return parts;
}

ConstructionParams parse_params(const std::string& text, Kind kind, Sign sign) {
  ConstructionParams p;
  p.kind = kind;
  p.sign = sign;
  std::map<std::string, Rational*> slots{{"a", &p.a}, {"b", &p.b}, {"c", &p.c}, {"d", &p.d}, {"e", &p.e}};
  std::map<std::string, bool> seen;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--params entries look like a=1, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    auto slot = slots.find(key);
    if (slot == slots.end()) throw UsageError("unknown parameter '" + key + "' in --params");
    if (seen[key]) throw UsageError("parameter '" + key + "' given twice");
    seen[key] = true;
    *slot->second = Rational::parse(item.substr(eq + 1));
  }
  for (const auto& [key, slot] : slots) {
    if (!seen[key]) throw UsageError("--params is missing '" + key + "'");
  }
  p.validate();
  return p;
}

bool parse_bool(const std::string& text, const std::string& flag) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError(flag + " expects true or false, got '" + text + "'");
}

LaurentPoly parse_expr(const std::string& text, char fallback) {
  return parse_laurent(text, detect_variable(text, fallback));
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw UsageError("cannot open output file '" + path_ + "'");
    file << text;
  }

 private:
  std::ostream& out_;
  std::string path_;
};

struct GenerateFlags {
  std::string kind;
  std::string sign = "plus";
  std::string params;
  int steps = 1;
  std::string T;
  bool symbolic = false;
  std::string r;
  std::string format = "json";
  std::string output;
};

int cmd_generate(const GenerateFlags& flags, std::ostream& out) {
  const Kind kind = parse_kind(flags.kind);
  const Sign sign = parse_sign(flags.sign);
  const ConstructionParams params = parse_params(flags.params, kind, sign);
  if (flags.steps < 1) throw UsageError("--steps must be at least 1");

  GenerateOptions options;
  options.steps = flags.steps;
  if (kind == Kind::Thm11 || kind == Kind::Thm12) {
    if (flags.symbolic == !flags.T.empty()) throw UsageError("give exactly one of --T and --symbolic");
    options.field = flags.symbolic ? FieldChoice::symbolic() : FieldChoice::at(Rational::parse(flags.T));
  }
  if (kind == Kind::Thm13) {
    // Degenerate conics are reported before the missing-slope check.
    build_conic_thm13(params);
    if (flags.r.empty()) throw UsageError("thm13 needs --r with at least one slope");
    for (const auto& item : split(flags.r, ',')) options.r_values.push_back(Rational::parse(item));
  }

  GenerateReport report{params, options.field, generate_solutions(params, options)};
  Emitter(out, flags.output).write(flags.format == "json" ? emit_json(report) + "\n" : emit_text(report));
  return kOk;
}

struct ParametrizeFlags {
  std::string kind = "thm13";
  std::string sign = "plus";
  std::string params;
  std::string format = "json";
  std::string output;
};

int cmd_parametrize(const ParametrizeFlags& flags, std::ostream& out) {
  const Kind kind = parse_kind(flags.kind);
  if (kind != Kind::Thm13) throw UsageError("parametrize only applies to thm13 (the conic family)");
  const ConstructionParams params = parse_params(flags.params, kind, parse_sign(flags.sign));
  ParametrizeReport report{params, parametrize_thm13(params)};
  Emitter(out, flags.output).write(flags.format == "json" ? emit_json(report) + "\n" : emit_text(report));
  return kOk;
}

struct VerifyFlags {
  std::string f, g, sign = "plus", x, y, z, format = "json", output;
};

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  VerifyEmission e{parse_expr(flags.f, 'x'), parse_expr(flags.g, 'y'), parse_sign(flags.sign),
                   Rational::parse(flags.x), Rational::parse(flags.y), Rational::parse(flags.z), {}};
  e.report = verify_solution(e.f, e.g, e.sign, e.x, e.y, e.z);
  Emitter(out, flags.output).write(flags.format == "json" ? emit_json(e) + "\n" : emit_text(e));
  if (!e.report.equation_holds) return kEquationFails;
  return e.report.nontrivial ? kOk : kTrivial;
}

struct SearchFlags {
  std::string f, g, sign = "plus";
  long bound = 0;
  std::string integer_z = "true";
  std::string nontrivial = "true";
  int shards = 1;
  std::optional<int> shard_index;
  std::string format = "json", output;
};

int cmd_search(const SearchFlags& flags, std::ostream& out) {
  SearchConfig config;
  config.f = parse_expr(flags.f, 'x');
  config.g = parse_expr(flags.g, 'y');
  config.sign = parse_sign(flags.sign);
  config.bound = flags.bound;
  config.require_integer_z = parse_bool(flags.integer_z, "--integer-z");
  config.require_nontrivial = parse_bool(flags.nontrivial, "--nontrivial");
  if (config.bound < 1) throw UsageError("--bound must be at least 1");

  SearchReport report{config, {}};
  if (flags.shard_index) {
    report.hits = search_sharded(config, flags.shards, *flags.shard_index);
  } else if (flags.shards > 1) {
    report.hits = search_parallel(config, flags.shards);
  } else {
    report.hits = search_integer_solutions(config);
  }
  Emitter(out, flags.output).write(flags.format == "json" ? emit_json(report) + "\n" : emit_text(report));
  return kOk;
}

int cmd_check_paper(int trials, std::uint64_t seed, std::ostream& out) {
  if (trials < 1) throw UsageError("--trials must be at least 1");
  const CrossCheckReport report = run_cross_checks(trials, seed);
  std::size_t width = 0;
  for (const auto& f : report.formulas) width = std::max(width, f.name.size());
  for (const auto& f : report.formulas) {
    out << f.name << std::string(width - f.name.size() + 2, ' ') << "pass=" << f.passed << " fail=" << f.failed
        << (f.failed ? "  first failure: " + f.counterexample : "") << "\n";
  }
  if (report.all_passed()) {
    out << "all closed forms agree (" << trials << " trials, seed " << seed << ")\n";
    return kOk;
  }
  out << "closed-form mismatch\n";
  return kCrossCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and checks for z^2 = f(x)^2 +- g(y)^2", "laurentdio"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "text"};
  const std::vector<std::string> signs{"plus", "minus"};

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Build solutions from one of the curve constructions");
  generate->add_option("--kind", gen.kind, "thm11 | thm12 | thm13 | thm14")->required()
      ->check(CLI::IsMember({"thm11", "thm12", "thm13", "thm14"}));
  generate->add_option("--sign", gen.sign, "plus | minus")->check(CLI::IsMember(signs));
  generate->add_option("--params", gen.params, "a=..,b=..,c=..,d=..,e=..")->required();
  generate->add_option("--steps", gen.steps, "number of ascent steps");
  generate->add_option("--T", gen.T, "rational value of T (thm11, thm12)");
  generate->add_flag("--symbolic", gen.symbolic, "work over Q(T) (thm11, thm12)");
  generate->add_option("--r", gen.r, "comma-separated line slopes (thm13)");
  generate->add_option("--format", gen.format)->check(CLI::IsMember(formats));
  generate->add_option("--output", gen.output, "write the emission to this file");

  ParametrizeFlags par;
  auto* parametrize = app.add_subcommand("parametrize", "Print the conic family as functions of the slope r");
  parametrize->add_option("--kind", par.kind, "thm13")->check(CLI::IsMember({"thm13"}));
  parametrize->add_option("--sign", par.sign, "plus | minus")->check(CLI::IsMember(signs));
  parametrize->add_option("--params", par.params, "a=..,b=..,c=..,d=..,e=..")->required();
  parametrize->add_option("--format", par.format)->check(CLI::IsMember(formats));
  parametrize->add_option("--output", par.output, "write the emission to this file");

  VerifyFlags ver;
  auto* verify = app.add_subcommand("verify", "Check one candidate solution exactly");
  verify->add_option("--f", ver.f)->required();
  verify->add_option("--g", ver.g)->required();
  verify->add_option("--sign", ver.sign)->check(CLI::IsMember(signs));
  verify->add_option("--x", ver.x)->required();
  verify->add_option("--y", ver.y)->required();
  verify->add_option("--z", ver.z)->required();
  verify->add_option("--format", ver.format)->check(CLI::IsMember(formats));
  verify->add_option("--output", ver.output);

  SearchFlags sea;
  auto* search = app.add_subcommand("search", "Exhaustive search over a box of integers");
  search->add_option("--f", sea.f)->required();
  search->add_option("--g", sea.g)->required();
  search->add_option("--sign", sea.sign)->check(CLI::IsMember(signs));
  search->add_option("--bound", sea.bound)->required();
  search->add_option("--integer-z", sea.integer_z, "require integral z (true/false)");
  search->add_option("--nontrivial", sea.nontrivial, "drop trivial solutions (true/false)");
  search->add_option("--shards", sea.shards);
  search->add_option("--shard-index", sea.shard_index);
  search->add_option("--format", sea.format)->check(CLI::IsMember(formats));
  search->add_option("--output", sea.output);

  int trials = 25;
  std::uint64_t seed = 42;
  auto* check = app.add_subcommand("check-paper", "Compare the closed-form points with the constructions");
  check->add_option("--trials", trials);
  check->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (parametrize->parsed()) return cmd_parametrize(par, out);
    if (verify->parsed()) return cmd_verify(ver, out);
    if (search->parsed()) return cmd_search(sea, out);
    return cmd_check_paper(trials, seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace ldio::cli
