#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grammarcalc/catalog.hpp"
#include "grammarcalc/errors.hpp"
#include "grammarcalc/grammar.hpp"
#include "grammarcalc/identities.hpp"
#include "grammarcalc/permutations.hpp"
#include "grammarcalc/polynomial.hpp"
#include "grammarcalc/recurrences.hpp"
#include "grammarcalc/series.hpp"

namespace grammarcalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

/// Thrown for invalid flag values found after CLI11 has parsed the command
/// line; always maps to the usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

using nlohmann::ordered_json;

inline Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + name + "'");
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read grammar file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Grammar resolve_grammar(const std::string& spec, bool strict) {
  for (const auto& entry : catalog())
    if (entry.key == spec) return entry.grammar.with_strict(strict);
  if (!spec.empty() && spec.front() == '@') return parse_grammar(read_file(spec.substr(1)), spec.substr(1), strict);
  return parse_grammar(spec, "inline", strict);
}

inline Bindings parse_assignments(const std::vector<std::string>& items) {
  Bindings out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects sym=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (!is_identifier(name)) throw UsageError("--set: '" + name + "' is not a symbol name");
    Rational value;
    try {
      value = parse_rational(item.substr(eq + 1));
    } catch (const ParseError& e) {
      throw UsageError("--set " + name + ": " + e.what());
    }
    if (!out.emplace(Symbol(name), Polynomial(value)).second) throw UsageError("--set assigns '" + name + "' twice");
  }
  return out;
}

inline TriangleFault parse_fault(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw UsageError("--inject-fault expects NAME:N:K:VALUE, got '" + text + "'");
  try {
    return TriangleFault{parse_triangle_name(parts[0]), static_cast<unsigned>(std::stoul(parts[1])), std::stoi(parts[2]),
                         Integer(parts[3])};
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  } catch (const std::exception&) {
    throw UsageError("--inject-fault: malformed number in '" + text + "'");
  }
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const ExponentOverflowError*>(&e)) return "exponent-overflow";
  if (dynamic_cast<const InexactDivisionError*>(&e)) return "inexact-division";
  if (dynamic_cast<const UnruledSymbolError*>(&e)) return "unruled-symbol";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const LookupError*>(&e)) return "lookup";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "internal";
}

inline ordered_json row_json(const std::vector<Integer>& row) {
  ordered_json out = ordered_json::array();
  for (const auto& v : row) out.push_back(to_string(v));
  return out;
}

inline std::string join(const std::vector<Integer>& row, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(row[i]);
  }
  return out;
}

inline ordered_json check_json(const CheckResult& r) {
  ordered_json j{{"key", r.key}, {"passed", r.passed}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"instances", r.instances}};
  if (r.witness)
    j["witness"] = {{"n", r.witness->n}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}, {"detail", r.witness->detail}};
  return j;
}

inline std::string check_text(const CheckResult& r) {
  std::string line = std::string(r.passed ? "PASS " : "FAIL ") + r.key + "  n=" + std::to_string(r.n_min) + ".." +
                     std::to_string(r.n_max) + "  (" + std::to_string(r.instances) + " instances)";
  if (r.witness) {
    line += "\n    first failure at n=" + std::to_string(r.witness->n);
    if (!r.witness->detail.empty()) line += " [" + r.witness->detail + "]";
    if (!r.witness->lhs.empty() || !r.witness->rhs.empty())
      line += "\n    lhs: " + r.witness->lhs + "\n    rhs: " + r.witness->rhs;
  }
  return line;
}

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Options {
  std::string format = "text";

  std::string grammar, seed;
  unsigned steps = 0;
  std::vector<std::string> assignments;
  bool strict = false;

  std::string triangle_name;
  unsigned rows = 0;

  std::string family;
  unsigned n = 0;

  std::string group;
  std::string stats;
  std::string vars = "x,y,z,u,v,w,q,r";
  std::string filter = "none";

  std::string check;
  bool all = false;
  std::string profile = "quick";
  std::vector<std::string> faults;

  std::string egf_name;
  unsigned order = 0;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact derivations, permutation statistics and identity checks for context-free grammars",
                 "grammarcalc"};
    app.require_subcommand(1);
    Options o;
    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* derive = app.add_subcommand("derive", "Apply the derivation of a grammar to a seed");
    derive->add_option("--grammar", o.grammar, "Catalog key, @file, or inline rules")->required();
    derive->add_option("--seed", o.seed, "Seed polynomial")->required();
    derive->add_option("--steps", o.steps, "Number of derivation steps")->required();
    derive->add_option("--set", o.assignments, "Substitute sym=rational after deriving")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    derive->add_flag("--strict", o.strict, "Reject symbols without a rule");
    add_format(derive);

    auto* tri = app.add_subcommand("triangle", "Print a number triangle");
    tri->add_option("name", o.triangle_name, "eulerA, eulerB, runsR, updownM, leftpeakP or runsT")->required();
    tri->add_option("--rows", o.rows, "Last row to print")->required();
    add_format(tri);

    auto* poly = app.add_subcommand("poly", "Print a polynomial from a named family");
    poly->add_option("family", o.family, "A, B, qA, qB, dA, dB, dA_altsum, dB_altsum, R, M, P or T")->required();
    poly->add_option("--n", o.n, "Index")->required();
    add_format(poly);

    auto* enumerate = app.add_subcommand("enumerate", "Distribution of statistics over a permutation group");
    enumerate->add_option("--family", o.group, "sym or hyp")->required()->check(CLI::IsMember({"sym", "hyp"}));
    enumerate->add_option("--n", o.n, "Group size")->required();
    enumerate->add_option("--stats", o.stats, "Comma-separated statistics")->required();
    enumerate->add_option("--vars", o.vars, "Comma-separated symbols, one per statistic");
    enumerate->add_option("--filter", o.filter, "none, derangement or up")
        ->check(CLI::IsMember({"none", "derangement", "up"}));
    add_format(enumerate);

    auto* verify = app.add_subcommand("verify", "Run identity checks");
    auto* check_opt = verify->add_option("--check", o.check, "Run one check");
    auto* all_opt = verify->add_flag("--all", o.all, "Run every check (the default)");
    check_opt->excludes(all_opt);
    verify->add_option("--profile", o.profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--inject-fault", o.faults, "Corrupt a triangle entry, NAME:N:K:VALUE")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->group("");
    add_format(verify);

    auto* egf = app.add_subcommand("egf", "Expand a closed-form exponential generating function");
    egf->add_option("--name", o.egf_name, "dA, dB, G or fivevar")
        ->required()
        ->check(CLI::IsMember({"dA", "dB", "G", "fivevar"}));
    egf->add_option("--order", o.order, "Truncation order")->required();
    add_format(egf);

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }

    format_ = parse_format(o.format);
    ordered_json input{{"command", app.get_subcommands().front()->get_name()}};
    try {
      if (derive->parsed()) return run_derive(o, input);
      if (tri->parsed()) return run_triangle(o, input);
      if (poly->parsed()) return run_poly(o, input);
      if (enumerate->parsed()) return run_enumerate(o, input);
      if (verify->parsed()) return run_verify(o, input);
      return run_egf(o, input);
    } catch (const UsageError& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const ParseError& e) {
      return report(input, e, kExitUsage);
    } catch (const LookupError& e) {
      return report(input, e, kExitUsage);
    } catch (const std::exception& e) {
      return report(input, e, kExitFailure);
    }
  }

 private:
  int report(const ordered_json& input, const std::exception& e, int code) {
    const std::string kind = error_kind(e);
    if (format_ == Format::Json) {
      out_ << ordered_json{{"input", input}, {"result", nullptr}, {"status", "error"},
                           {"error", {{"kind", kind}, {"message", e.what()}}}}
                  .dump()
           << "\n";
    }
    err_ << "error (" << kind << "): " << e.what() << "\n";
    return code;
  }

  void emit_polynomial(const ordered_json& input, const std::string& label, const Polynomial& p) {
    const std::string text = p.to_string();
    switch (format_) {
      case Format::Text: out_ << text << "\n"; break;
      case Format::Json: out_ << ordered_json{{"input", input}, {"result", text}, {"status", "ok"}}.dump() << "\n"; break;
      case Format::Csv: out_ << label << ",result\n" << csv_field(input.at(label).dump()) << "," << csv_field(text) << "\n"; break;
    }
  }

  int run_derive(const Options& o, ordered_json& input) {
    input["grammar"] = o.grammar;
    input["seed"] = o.seed;
    input["steps"] = o.steps;
    if (!o.assignments.empty()) input["set"] = o.assignments;
    if (o.strict) input["strict"] = true;
    const Bindings bindings = parse_assignments(o.assignments);
    const Grammar g = resolve_grammar(o.grammar, o.strict);
    const Polynomial seed = Polynomial::parse(o.seed);
    Polynomial result = derive_n(g, seed, o.steps);
    if (!bindings.empty()) result = substitute(result, bindings);
    emit_polynomial(input, "steps", result);
    return kExitOk;
  }

  int run_triangle(const Options& o, ordered_json& input) {
    input["name"] = o.triangle_name;
    input["rows"] = o.rows;
    const TriangleName name = parse_triangle_name(o.triangle_name);
    const Triangle t = triangle(name, o.rows);
    const unsigned first = triangle_first_row(name);
    switch (format_) {
      case Format::Csv: out_ << t.to_csv(); break;
      case Format::Text:
        for (unsigned n = first; n <= o.rows; ++n) out_ << n << ": " << join(t.row(n), " ") << "\n";
        break;
      case Format::Json: {
        ordered_json rows = ordered_json::array();
        for (unsigned n = first; n <= o.rows; ++n) rows.push_back(row_json(t.row(n)));
        out_ << ordered_json{{"input", input}, {"result", rows}, {"status", "ok"}}.dump() << "\n";
        break;
      }
    }
    return kExitOk;
  }

  int run_poly(const Options& o, ordered_json& input) {
    input["family"] = o.family;
    input["n"] = o.n;
    emit_polynomial(input, "n", family_polynomial(parse_family_polynomial_name(o.family), o.n));
    return kExitOk;
  }

  int run_enumerate(const Options& o, ordered_json& input) {
    input["family"] = o.group;
    input["n"] = o.n;
    input["stats"] = o.stats;
    input["vars"] = o.vars;
    input["filter"] = o.filter;
    const GroupFamily family = parse_family(o.group);
    const ElementFilter filter = parse_filter(o.filter);
    const auto stats = split(o.stats, ',');
    const auto vars = split(o.vars, ',');
    if (vars.size() < stats.size())
      throw UsageError("--vars names " + std::to_string(vars.size()) + " symbols for " + std::to_string(stats.size()) +
                       " statistics");
    std::vector<StatWeight> weights;
    for (std::size_t i = 0; i < stats.size(); ++i) {
      Statistic s;
      try {
        s = parse_statistic(stats[i]);
      } catch (const LookupError& e) {
        throw UsageError(e.what());
      }
      if (!statistic_applies(s, family))
        throw UsageError("statistic '" + stats[i] + "' is not defined for family " + o.group);
      if (!is_identifier(vars[i])) throw UsageError("'" + vars[i] + "' is not a symbol name");
      weights.push_back({s, Symbol(vars[i])});
    }
    const OracleLimits limits = OracleLimits::from_environment();
    if (o.n > limits.max_for(family))
      throw UsageError("n = " + std::to_string(o.n) + " exceeds the enumeration limit " +
                       std::to_string(limits.max_for(family)) + " for " + o.group);
    emit_polynomial(input, "n", distribution(family, o.n, weights, filter, limits));
    return kExitOk;
  }

  int run_verify(const Options& o, ordered_json& input) {
    input["profile"] = o.profile;
    if (!o.check.empty()) input["check"] = o.check;
    if (!o.faults.empty()) input["inject_fault"] = o.faults;
    std::vector<TriangleFault> faults;
    for (const auto& f : o.faults) faults.push_back(parse_fault(f));
    const Profile profile = Profile::parse(o.profile);
    const IdentitySuite suite(std::move(faults));

    std::vector<CheckResult> results;
    if (!o.check.empty()) {
      if (std::find(kCheckKeys.begin(), kCheckKeys.end(), o.check) == kCheckKeys.end())
        throw UsageError("unknown check key '" + o.check + "'");
      results.push_back(suite.run_check(o.check, profile));
    } else {
      results = suite.run_all(profile);
    }
    const bool ok = all_passed(results);
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });

    switch (format_) {
      case Format::Text:
        for (const auto& r : results) out_ << check_text(r) << "\n";
        out_ << (ok ? "all " + std::to_string(results.size()) + " checks passed"
                    : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
             << " (profile " << profile.name << ")\n";
        break;
      case Format::Csv:
        out_ << "key,status,n_min,n_max,instances,witness_n,witness_lhs,witness_rhs,detail\n";
        for (const auto& r : results) {
          out_ << r.key << "," << (r.passed ? "pass" : "fail") << "," << r.n_min << "," << r.n_max << ","
               << r.instances << ",";
          if (r.witness)
            out_ << r.witness->n << "," << csv_field(r.witness->lhs) << "," << csv_field(r.witness->rhs) << ","
                 << csv_field(r.witness->detail);
          else
            out_ << ",,,";
          out_ << "\n";
        }
        break;
      case Format::Json: {
        ordered_json list = ordered_json::array();
        for (const auto& r : results) list.push_back(check_json(r));
        out_ << ordered_json{{"input", input}, {"result", list}, {"status", ok ? "pass" : "fail"}}.dump() << "\n";
        break;
      }
    }
    return ok ? kExitOk : kExitFailure;
  }

  int run_egf(const Options& o, ordered_json& input) {
    input["name"] = o.egf_name;
    input["order"] = o.order;
    const std::string key = o.egf_name == "fivevar" ? "egf-5var" : "egf-" + o.egf_name;
    const TruncatedSeries s = egf_reference(key, o.order);
    switch (format_) {
      case Format::Text:
        for (unsigned n = 0; n <= s.order(); ++n) out_ << n << ": " << s.egf_coefficient(n).to_string() << "\n";
        break;
      case Format::Csv:
        out_ << "n,coefficient\n";
        for (unsigned n = 0; n <= s.order(); ++n) out_ << n << "," << csv_field(s.egf_coefficient(n).to_string()) << "\n";
        break;
      case Format::Json: {
        ordered_json list = ordered_json::array();
        for (unsigned n = 0; n <= s.order(); ++n) list.push_back(s.egf_coefficient(n).to_string());
        out_ << ordered_json{{"input", input}, {"result", list}, {"status", "ok"}}.dump() << "\n";
        break;
      }
    }
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  Format format_ = Format::Text;
};

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  detail::Runner runner(out, err);
  return runner.run(args);
}

}  // namespace grammarcalc::cli
