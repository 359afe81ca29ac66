#pragma once

#include "racah/algebra.hpp"
#include "racah/analysis.hpp"
#include "racah/expr.hpp"
#include "racah/rewrite.hpp"
#include "racah/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace racah::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status { Ok, Fail, Error };

inline const char* to_string(Status s) {
  switch (s) {
  case Status::Ok: return "ok";
  case Status::Fail: return "fail";
  case Status::Error: return "error";
  }
  return "error";
}

struct CliReport {
  Status status = Status::Ok;
  std::string out; // stdout
  std::string err; // stderr

  int exit_code() const { return status == Status::Ok ? 0 : status == Status::Fail ? 1 : 2; }
};

struct Options {
  std::string format = "text";
  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t seed = suites::SuiteConfig{}.seed;
  AnalysisLimits limits;
};

namespace detail {

using nlohmann::ordered_json;

struct Output {
  const Options& opts;
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json payload = ordered_json::object();
  std::string text;

  CliReport finish(Status status) const {
    CliReport r;
    r.status = status;
    if (opts.format == "json") {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = command;
      j["inputs"] = inputs;
      j["status"] = to_string(status);
      for (const auto& [k, v] : payload.items())
        j[k] = v;
      r.out = j.dump(2) + "\n";
    } else {
      r.out = text;
    }
    return r;
  }

  CliReport error(const std::string& message) const {
    CliReport r;
    r.status = Status::Error;
    if (opts.format == "json") {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = command;
      j["inputs"] = inputs;
      j["status"] = "error";
      j["error"] = message;
      r.out = j.dump(2) + "\n";
    }
    r.err = "error: " + message + "\n";
    return r;
  }
};


inline std::string tuple_text(const ExponentTuple& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

inline ordered_json tuple_json(const ExponentTuple& t) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < kLetterCount; ++i)
    a.push_back(t[i]);
  return a;
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline CliReport run(const std::vector<std::string>& args) {
  Options opts;
  CLI::App app{"Exact normal forms and identity checks in the universal Racah algebra", "racah"};
  app.set_config("--config", "", "key=value configuration file");
  app.option_defaults()->always_capture_default();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fuel", opts.fuel, "Rewrite step limit per reduction");
  app.add_option("--seed", opts.seed, "Seed for sampled checks");
  app.add_option("--center-bound-max", opts.limits.center_bound, "Largest accepted center bound");
  app.add_option("--independence-bound", opts.limits.independence_bound,
                 "Weight bound for the independence suite");
  app.add_option("--pbw-bound-max", opts.limits.pbw_bound, "Largest accepted PBW bound");
  app.require_subcommand(1);

  std::string expr1, expr2, morphism_name, suite_name;
  unsigned bound = 0;
  bool show_basis = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the normal form of an expression");
  reduce_cmd->add_option("expr", expr1)->required();
  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two expressions are equal");
  eq_cmd->add_option("lhs", expr1)->required();
  eq_cmd->add_option("rhs", expr2)->required();
  auto* degree_cmd = app.add_subcommand("degree", "Filtration degree of an expression");
  degree_cmd->add_option("expr", expr1)->required();
  auto* leading_cmd = app.add_subcommand("leading", "Leading term of an expression");
  leading_cmd->add_option("expr", expr1)->required();
  auto* apply_cmd = app.add_subcommand("apply", "Apply a D6 element, e.g. sigma*tau^2");
  apply_cmd->add_option("morphism", morphism_name)->required();
  apply_cmd->add_option("expr", expr1)->required();
  auto* confluence_cmd = app.add_subcommand("confluence", "Resolve every overlap ambiguity");
  auto* center_cmd = app.add_subcommand("center", "Center dimension at a filtration bound");
  center_cmd->add_option("--bound", bound, "Filtration bound")->required();
  center_cmd->add_flag("--basis", show_basis, "Also print a kernel basis");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite_name)->required();
  auto* list_cmd = app.add_subcommand("list-suites", "List verification suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return CliReport{Status::Ok, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return CliReport{Status::Error, out.str(), err.str()};
  }

  const ReductionSystem sys(opts.fuel);
  std::string command;
  for (const CLI::App* sub : app.get_subcommands())
    command = sub->get_name();
  detail::Output o{opts, command};

  try {
    if (*reduce_cmd) {
      o.inputs["expr"] = expr1;
      std::string r = expr::print_canonical(sys.reduce(expr::parse(expr1)));
      o.payload["result"] = r;
      o.text = r + "\n";
      return o.finish(Status::Ok);
    }
    if (*eq_cmd) {
      o.inputs["lhs"] = expr1;
      o.inputs["rhs"] = expr2;
      NcPoly diff = sys.reduce(expr::parse(expr1) - expr::parse(expr2));
      bool equal = diff.is_zero();
      o.payload["equal"] = equal;
      o.text = std::string("equal: ") + (equal ? "true" : "false") + "\n";
      if (!equal) {
        o.payload["difference"] = expr::print_canonical(diff);
        o.text += "difference: " + expr::print_canonical(diff) + "\n";
      }
      return o.finish(equal ? Status::Ok : Status::Fail);
    }
    if (*degree_cmd) {
      o.inputs["expr"] = expr1;
      FiltrationDegree d = degree(sys.reduce(expr::parse(expr1)));
      o.payload["degree"] =
          d.is_zero_sentinel() ? detail::ordered_json(nullptr) : detail::ordered_json(d.value());
      o.text = d.to_string() + "\n";
      return o.finish(Status::Ok);
    }
    if (*leading_cmd) {
      o.inputs["expr"] = expr1;
      LeadingTerm lt = leading_term(sys.reduce(expr::parse(expr1)));
      std::string term = expr::print_canonical(NcPoly(Word::from_exponents(lt.tuple), lt.coefficient));
      o.payload["tuple"] = detail::tuple_json(lt.tuple);
      o.payload["coefficient"] = lt.coefficient.to_string();
      o.payload["term"] = term;
      o.text = "tuple: " + detail::tuple_text(lt.tuple) + "\ncoefficient: " +
               lt.coefficient.to_string() + "\nterm: " + term + "\n";
      return o.finish(Status::Ok);
    }
    if (*apply_cmd) {
      o.inputs["morphism"] = morphism_name;
      o.inputs["expr"] = expr1;
      auto g = D6Element::parse(morphism_name);
      if (!g)
        return o.error("unknown morphism '" + morphism_name +
                     "' (expected id, sigma, tau^k or sigma*tau^k, k in 0..5)");
      std::string r = expr::print_canonical(apply(g->realized(), expr::parse(expr1), sys));
      o.payload["result"] = r;
      o.text = r + "\n";
      return o.finish(Status::Ok);
    }
    if (*confluence_cmd) {
      auto reports = sys.check_confluence();
      std::size_t ok = 0;
      detail::ordered_json list = detail::ordered_json::array();
      for (const auto& r : reports) {
        ok += r.resolvable;
        o.text += r.overlap_word.to_string() + ": " +
                  (r.resolvable ? "resolvable" : "NOT resolvable") + "\n";
        list.push_back({{"word", r.overlap_word.to_string()},
                        {"resolvable", r.resolvable},
                        {"left", expr::print_canonical(r.left_path_result)},
                        {"right", expr::print_canonical(r.right_path_result)}});
      }
      o.text += "overlaps: " + std::to_string(reports.size()) +
                ", resolvable: " + std::to_string(ok) + "\n";
      o.payload["overlap_count"] = reports.size();
      o.payload["resolvable_count"] = ok;
      o.payload["overlaps"] = std::move(list);
      return o.finish(ok == reports.size() ? Status::Ok : Status::Fail);
    }
    if (*center_cmd) {
      o.inputs["bound"] = bound;
      CenterReport rep = center_basis(bound, opts.limits);
      o.payload["bound"] = rep.bound;
      o.payload["kernel_dimension"] = rep.kernel_dimension;
      o.payload["expected_dimension"] = rep.expected_dimension;
      o.payload["matches"] = rep.matches;
      o.text = "bound: " + std::to_string(rep.bound) +
               "\nkernel_dimension: " + std::to_string(rep.kernel_dimension) +
               "\nexpected_dimension: " + std::to_string(rep.expected_dimension) +
               "\nmatches: " + (rep.matches ? "true" : "false") + "\n";
      if (show_basis) {
        detail::ordered_json basis = detail::ordered_json::array();
        o.text += "basis:\n";
        for (const NcPoly& b : rep.basis) {
          std::string s = expr::print_canonical(b);
          basis.push_back(s);
          o.text += "  " + s + "\n";
        }
        o.payload["basis"] = std::move(basis);
      }
      return o.finish(rep.matches ? Status::Ok : Status::Fail);
    }
    if (*verify_cmd) {
      o.inputs["suite"] = suite_name;
      std::vector<const suites::Suite*> selected;
      if (suite_name == "all") {
        for (const suites::Suite& s : suites::catalogue())
          selected.push_back(&s);
      } else if (const suites::Suite* s = suites::find_suite(suite_name)) {
        selected.push_back(s);
      } else {
        return o.error("unknown suite '" + suite_name + "'");
      }
      suites::SuiteConfig cfg{opts.limits, opts.seed};
      std::size_t passed = 0, total = 0;
      detail::ordered_json checks = detail::ordered_json::array();
      for (const suites::Suite* s : selected) {
        for (const suites::CheckResult& c : s->run(cfg)) {
          ++total;
          passed += c.pass;
          o.text += std::string(c.pass ? "PASS " : "FAIL ") + std::string(s->name) + ": " +
                    c.name + "\n";
          checks.push_back({{"suite", s->name},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"elapsed_ms", c.elapsed_ms}});
        }
      }
      o.text += std::to_string(passed) + "/" + std::to_string(total) + " checks passed\n";
      o.payload["passed"] = passed;
      o.payload["failed"] = total - passed;
      o.payload["checks"] = std::move(checks);
      return o.finish(passed == total ? Status::Ok : Status::Fail);
    }
    if (*list_cmd) {
      detail::ordered_json names = detail::ordered_json::array();
      for (const suites::Suite& s : suites::catalogue()) {
        names.push_back(s.name);
        o.text += std::string(s.name) + "\n";
      }
      names.push_back("all");
      o.text += "all\n";
      o.payload["suites"] = std::move(names);
      return o.finish(Status::Ok);
    }
  } catch (const expr::ExprError& e) {
    return o.error(e.what());
  } catch (const BoundTooLarge& e) {
    return o.error(e.what());
  } catch (const ZeroPolynomial& e) {
    return o.error(e.what());
  } catch (const FuelExhausted& e) {
    return o.error(e.what());
  }
  return o.error("no command given");
}

} // namespace racah::cli
