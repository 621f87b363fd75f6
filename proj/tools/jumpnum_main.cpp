// jumpnum: command-line front end for the jumping-number toolkit.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jumpnum/candidates.hpp"
#include "jumpnum/contribution.hpp"
#include "jumpnum/fixture_io.hpp"
#include "jumpnum/report.hpp"
#include "jumpnum/surface.hpp"
#include "jumpnum/validate.hpp"

using namespace jumpnum;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw PreconditionError(flag + ": " + e.what());
  }
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string id; std::getline(ss, id, ',');) {
    if (!id.empty()) out.push_back(id);
  }
  return out;
}

std::string join_ids(const std::set<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : ", ") + id;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jumping numbers, log canonical thresholds and contribution verdicts from resolution data"};
  app.require_subcommand(1);
  bool force = false;
  app.add_flag("--force", force, "load fixtures even when validation reports diagnostics");

  std::string file, upper_text = "1", divisor, lambda_text, method = "auto", format = "text", output;
  std::vector<std::string> values;
  bool as_json = false;
  std::int64_t p = 0, q = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check a fixture; diagnostics go to standard error");
  validate_cmd->add_option("file", file, "fixture path")->required();

  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold and the divisors achieving it");
  lct_cmd->add_option("file", file, "fixture path")->required();

  auto* cand_cmd = app.add_subcommand("candidates", "candidate jumping numbers in (0, upper]");
  cand_cmd->add_option("file", file, "fixture path")->required();
  cand_cmd->add_option("--upper", upper_text, "upper bound p/q")->required();
  cand_cmd->add_option("--divisor", divisor, "restrict to one divisor's candidates");

  auto* jn_cmd = app.add_subcommand("jumping-numbers", "all jumping numbers in (0, upper] (surfaces only)");
  jn_cmd->add_option("file", file, "fixture path")->required();
  jn_cmd->add_option("--upper", upper_text, "upper bound p/q")->required();

  auto* contrib_cmd = app.add_subcommand("contributes", "does the divisor contribute lambda? exit 0 yes, 1 no, 2 undecidable");
  contrib_cmd->add_option("file", file, "fixture path")->required();
  contrib_cmd->add_option("--divisor", divisor, "divisor id, or comma-separated chain of ids")->required();
  contrib_cmd->add_option("--lambda", lambda_text, "candidate p/q")->required();
  contrib_cmd->add_option("--method", method, "auto, effectivity or criterion")
      ->check(CLI::IsMember({"auto", "effectivity", "criterion"}));
  contrib_cmd->add_flag("--json", as_json, "emit the verdict as JSON");

  auto* crit_cmd = app.add_subcommand("criteria", "closed-form criterion that applies to a divisor and its verdict");
  crit_cmd->add_option("file", file, "fixture path")->required();
  crit_cmd->add_option("--divisor", divisor, "divisor id")->required();

  auto* report_cmd = app.add_subcommand("report", "full per-divisor report");
  report_cmd->add_option("file", file, "fixture path")->required();
  report_cmd->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* skoda_cmd = app.add_subcommand("skoda", "extend jumping numbers in (0,1] by nonnegative integers");
  skoda_cmd->add_option("values", values, "jumping numbers p/q in (0,1]");
  skoda_cmd->add_option("--upper", upper_text, "upper bound p/q")->required();

  auto* gen_cmd = app.add_subcommand("gen-xpyq", "write the minimal embedded resolution of x^p = y^q as a fixture");
  gen_cmd->add_option("-p", p, "exponent of x")->required();
  gen_cmd->add_option("-q", q, "exponent of y")->required();
  gen_cmd->add_option("-o,--output", output, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      const auto data = load_fixture(file, true);
      const auto diags = validate(data);
      for (const auto& d : diags) std::cerr << to_string(d) << "\n";
      if (!diags.empty()) return kExitData;
      std::cout << "ok\n";
      return 0;
    }
    if (skoda_cmd->parsed()) {
      std::set<Rational> in;
      for (const auto& v : values) in.insert(parse_rational(v, "value"));
      const auto out = skoda_extend(in, parse_rational(upper_text, "--upper"));
      std::string line;
      for (const auto& r : out) line += (line.empty() ? "" : ", ") + r.str();
      std::cout << line << "\n";
      return 0;
    }
    if (gen_cmd->parsed()) {
      const auto text = fixture_to_json(monomial_curve_resolution(p, q)).dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write '" + output + "'");
        out << text;
      }
      return 0;
    }

    const auto data = load_fixture(file, force);
    if (lct_cmd->parsed()) {
      const auto [t, ids] = lct(data);
      std::cout << t << " (" << join_ids(ids) << ")\n";
    } else if (cand_cmd->parsed()) {
      const Rational upper = parse_rational(upper_text, "--upper");
      if (!divisor.empty()) {
        std::string line;
        for (const auto& r : candidates_of(data.divisor(divisor), upper)) line += (line.empty() ? "" : ", ") + r.str();
        std::cout << line << "\n";
      } else {
        for (const auto& e : candidates(data, upper).entries) std::cout << e.lambda << " (" << join_ids(e.supporters) << ")\n";
      }
    } else if (jn_cmd->parsed()) {
      std::string line;
      for (const auto& r : surface_jumping_numbers(data, parse_rational(upper_text, "--upper"))) {
        line += (line.empty() ? "" : ", ") + r.str();
      }
      std::cout << line << "\n";
    } else if (contrib_cmd->parsed()) {
      const MethodChoice choice = method == "effectivity" ? MethodChoice::effectivity
                                  : method == "criterion" ? MethodChoice::criterion
                                                          : MethodChoice::automatic;
      const auto v = contributes(data, split_ids(divisor), parse_rational(lambda_text, "--lambda"), choice);
      if (as_json) std::cout << verdict_json(v).dump(2) << "\n";
      else std::cout << format_verdict(v);
      switch (v.verdict) {
        case Verdict::contributes: return 0;
        case Verdict::does_not_contribute: return 1;
        case Verdict::undecidable: return 2;
      }
    } else if (crit_cmd->parsed()) {
      std::cout << format_criteria(divisor, criteria_report(data, divisor));
    } else if (report_cmd->parsed()) {
      if (format == "json") std::cout << report_json(data).dump(2) << "\n";
      else if (format == "dot") std::cout << report_dot(data);
      else std::cout << report_text(data);
    }
    return 0;
  } catch (const ValidationFailed& e) {
    for (const auto& d : e.diagnostics()) std::cerr << to_string(d) << "\n";
    std::cerr << "error: fixture failed validation (use --force to load anyway)\n";
    return kExitData;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    std::cerr << "error: inconsistent data: " << e.what() << "\n";
    return kExitData;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: missing data: " << e.what() << "\n";
    return kExitData;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
