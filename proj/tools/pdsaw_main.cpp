#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pdsaw/bijections.hpp"
#include "pdsaw/encode.hpp"
#include "pdsaw/enumerate.hpp"
#include "pdsaw/qseries.hpp"
#include "pdsaw/render_ascii.hpp"
#include "pdsaw/report.hpp"
#include "pdsaw/stats.hpp"
#include "pdsaw/verify.hpp"

namespace {

using nlohmann::json;
using namespace pdsaw;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::vector<std::string> gather_inputs(const std::string& input_flag) {
  if (!input_flag.empty()) return {input_flag};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct MapOutcome {
  Object output;
  std::optional<RuleTrace> trace;
  std::vector<std::string> route;
};

MapOutcome apply_route(const Object& input, Kind to, const std::string& route_flag) {
  Kind from = kind_of(input);
  auto named = [](Kind a, Kind b, Kind c) {
    return std::vector<std::string>{kind_name(a), kind_name(b), kind_name(c)};
  };
  auto direct = [](Kind a, Kind b) {
    return std::vector<std::string>{kind_name(a), kind_name(b)};
  };
  if (route_flag == "nadeau" &&
      !((from == Kind::AsymPdsaw && to == Kind::Permutation) ||
        (from == Kind::Permutation && to == Kind::AsymPdsaw)))
    throw Error("--route nadeau only applies between asym-pdsaw and permutation");

  if (from == Kind::SymPdsaw && to == Kind::WeightedDyck) {
    RuleTrace trace;
    auto path = sym_pdsaw_to_dyck(std::get<SymPdsaw>(input), &trace);
    return {path, trace, direct(from, to)};
  }
  if (from == Kind::WeightedDyck && to == Kind::SymPdsaw)
    return {dyck_to_sym_pdsaw(std::get<WeightedDyckPath>(input)), std::nullopt, direct(from, to)};
  if (from == Kind::Matching && to == Kind::WeightedDyck)
    return {matching_to_dyck(std::get<Matching>(input)), std::nullopt, direct(from, to)};
  if (from == Kind::WeightedDyck && to == Kind::Matching)
    return {dyck_to_matching(std::get<WeightedDyckPath>(input)), std::nullopt, direct(from, to)};
  if (from == Kind::SymPdsaw && to == Kind::Matching) {
    RuleTrace trace;
    auto path = sym_pdsaw_to_dyck(std::get<SymPdsaw>(input), &trace);
    return {dyck_to_matching(path), trace, named(from, Kind::WeightedDyck, to)};
  }
  if (from == Kind::Matching && to == Kind::SymPdsaw)
    return {dyck_to_sym_pdsaw(matching_to_dyck(std::get<Matching>(input))), std::nullopt,
            named(from, Kind::WeightedDyck, to)};

  if (from == Kind::AsymPdsaw && to == Kind::WeightedMotzkin) {
    RuleTrace trace;
    auto path = asym_pdsaw_to_motzkin(std::get<AsymPdsaw>(input), &trace);
    return {path, trace, direct(from, to)};
  }
  if (from == Kind::WeightedMotzkin && to == Kind::AsymPdsaw)
    return {motzkin_to_asym_pdsaw(std::get<WeightedMotzkinPath>(input)), std::nullopt,
            direct(from, to)};
  if (from == Kind::Permutation && to == Kind::WeightedMotzkin)
    return {perm_to_motzkin(std::get<Permutation>(input)), std::nullopt, direct(from, to)};
  if (from == Kind::WeightedMotzkin && to == Kind::Permutation)
    return {motzkin_to_perm(std::get<WeightedMotzkinPath>(input)), std::nullopt, direct(from, to)};
  if (from == Kind::AsymPdsaw && to == Kind::Permutation) {
    if (route_flag == "nadeau")
      return {nadeau(std::get<AsymPdsaw>(input)), std::nullopt, direct(from, to)};
    RuleTrace trace;
    auto path = asym_pdsaw_to_motzkin(std::get<AsymPdsaw>(input), &trace);
    return {motzkin_to_perm(path), trace, named(from, Kind::WeightedMotzkin, to)};
  }
  if (from == Kind::Permutation && to == Kind::AsymPdsaw) {
    if (route_flag == "nadeau")
      return {nadeau_inverse(std::get<Permutation>(input)), std::nullopt, direct(from, to)};
    return {motzkin_to_asym_pdsaw(perm_to_motzkin(std::get<Permutation>(input))), std::nullopt,
            named(from, Kind::WeightedMotzkin, to)};
  }
  throw Error("no route from " + kind_name(from) + " to " + kind_name(to));
}

std::string pretty_stats(const json& stats) {
  std::string out;
  for (auto it = stats.begin(); it != stats.end(); ++it) {
    if (it.key() == "kind") continue;
    if (!out.empty()) out += " ";
    out += it.key() + "=" + it.value().dump();
  }
  return out;
}

int cmd_enumerate(const std::string& kind_name_flag, int n, bool with_stats, std::uint64_t cap,
                  bool pretty) {
  Kind kind = kind_from_name(kind_name_flag);
  for (const Object& object : enumerate_objects(kind, n, cap)) {
    std::string text = render_text(object);
    if (pretty) {
      std::cout << text;
      if (with_stats) std::cout << "  | " << pretty_stats(stat_report_json(object));
      std::cout << "\n";
    } else {
      json line = {{"text", text}};
      if (with_stats) line["stats"] = stat_report_json(object);
      std::cout << line.dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_map(const std::string& to_kind, const std::string& input_flag, const std::string& route,
            bool pretty) {
  Kind to = kind_from_name(to_kind);
  for (const std::string& line : gather_inputs(input_flag)) {
    Object input = parse_object(line);
    MapOutcome outcome = apply_route(input, to, route);
    std::string in_text = render_text(input);
    std::string out_text = render_text(outcome.output);
    if (pretty) {
      std::cout << in_text << " -> " << out_text << "\n";
      std::cout << "  in:  " << pretty_stats(stat_report_json(input)) << "\n";
      std::cout << "  out: " << pretty_stats(stat_report_json(outcome.output)) << "\n";
    } else {
      json out = {{"input", in_text},
                  {"output", out_text},
                  {"route", outcome.route},
                  {"stats_in", stat_report_json(input)},
                  {"stats_out", stat_report_json(outcome.output)}};
      if (outcome.trace) out["trace"] = trace_json(*outcome.trace);
      std::cout << out.dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_diagnose_nadeau(int max_n, std::uint64_t cap, bool pretty) {
  std::uint64_t walks = 0, identical = 0, sigma1_agree = 0, both_transport_north = 0;
  for (int n = 0; n <= max_n; ++n) {
    for (const AsymPdsaw& walk : enumerate_asym_pdsaws(n, cap)) {
      ++walks;
      Permutation direct = nadeau(walk);
      Permutation composed = motzkin_to_perm(asym_pdsaw_to_motzkin(walk));
      if (direct == composed) ++identical;
      if (n == 0 || direct.image(1) == composed.image(1)) ++sigma1_agree;
      if (pattern_31_2(direct) == north_steps(walk) && nestings(composed) == north_steps(walk))
        ++both_transport_north;
    }
  }
  json out = {{"max_n", max_n},
              {"walks", walks},
              {"identical", identical},
              {"sigma1_agree", sigma1_agree},
              {"both_transport_north", both_transport_north}};
  if (pretty)
    std::cout << "nadeau vs motzkin composition over " << walks << " walks (n <= " << max_n
              << "): identical " << identical << ", sigma(1) agreement " << sigma1_agree
              << ", north-step transport holds for both " << both_transport_north << "\n";
  else
    std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, std::uint64_t cap, int jobs, bool pretty) {
  VerifyOptions options;
  options.max_n = max_n;
  options.cap = cap;
  options.jobs = jobs;
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = run_all_suites(options);
  } else {
    reports.push_back(run_verify_suite(suite, options));
  }
  bool ok = true;
  for (const auto& report : reports) {
    ok = ok && report.ok();
    if (pretty) {
      std::cout << "suite " << report.suite << " [" << report.params << "]: " << report.cases
                << " cases, " << report.failures.size() << " failures\n";
      std::size_t shown = 0;
      for (const auto& failure : report.failures) {
        if (++shown > 20) {
          std::cout << "  ... " << report.failures.size() - 20 << " more\n";
          break;
        }
        std::cout << "  " << failure.input << ": expected " << failure.expected << ", got "
                  << failure.actual << "\n";
      }
    } else {
      std::cout << verify_report_json(report).dump() << "\n";
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_formula(const std::string& which, int n, bool pretty) {
  QPoly poly;
  if (which == "touchard") poly = touchard_riordan(n);
  else if (which == "williams") poly = williams(n);
  else if (which == "cf-hermite") poly = cf_moments(MomentFamily::Hermite, n);
  else if (which == "cf-laguerre") poly = cf_moments(MomentFamily::Laguerre, n);
  else throw Error("unknown formula '" + which + "'");
  if (pretty) {
    std::cout << poly.str() << "\n";
  } else {
    json out = poly_json(poly);
    out["which"] = which;
    out["n"] = n;
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

int cmd_distribution(const std::string& kind_flag, const std::string& stat, int n,
                     std::uint64_t cap, bool pretty) {
  Kind kind = kind_from_name(kind_flag);
  QPoly poly = statistic_distribution(kind, stat, n, cap);
  if (pretty) {
    std::cout << poly.str() << "\n";
  } else {
    json out = poly_json(poly);
    out["kind"] = kind_name(kind);
    out["stat"] = stat;
    out["n"] = n;
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

int cmd_render(const std::string& input_flag) {
  for (const std::string& line : gather_inputs(input_flag)) {
    Object object = parse_object(line);
    std::cout << render_ascii(object) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pdsaw: exact enumeration, statistics and bijections for wedge-confined\n"
      "partially directed self-avoiding walks, matchings, permutations and\n"
      "weighted Dyck/Motzkin paths.\n\n"
      "Composite map routes: sym-pdsaw <-> matching goes through weighted-dyck;\n"
      "asym-pdsaw <-> permutation goes through weighted-motzkin by default and\n"
      "directly with --route nadeau."};
  app.require_subcommand(1);

  std::string kind_flag, input_flag, suite_flag, which_flag, stat_flag;
  std::string route_flag = "motzkin";
  int n = 0, max_n = -1, jobs = 1;
  std::uint64_t cap = kDefaultCap;
  bool stats_flag = false, pretty = false, diagnose = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all objects of a kind and size");
  enumerate_cmd->add_option("--kind", kind_flag, "object kind")->required();
  enumerate_cmd->add_option("--n", n, "size parameter")->required();
  enumerate_cmd->add_flag("--stats", stats_flag, "attach a statistics report to each line");
  enumerate_cmd->add_option("--cap", cap, "enumeration size guard");
  enumerate_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* map_cmd = app.add_subcommand("map", "Apply a bijection to objects");
  map_cmd->add_option("--kind", kind_flag, "target kind");
  map_cmd->add_option("--input", input_flag, "object text (default: stdin, one per line)");
  map_cmd->add_option("--route", route_flag, "route between asym-pdsaw and permutation")
      ->check(CLI::IsMember({"motzkin", "nadeau"}));
  map_cmd->add_flag("--diagnose-nadeau", diagnose,
                    "compare nadeau against the motzkin composition and report agreement");
  map_cmd->add_option("--max-n", max_n, "size bound for --diagnose-nadeau (default 6)");
  map_cmd->add_option("--cap", cap, "enumeration size guard");
  map_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite_flag, "suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "uniform size bound (default: per-suite sizes)");
  verify_cmd->add_option("--cap", cap, "enumeration size guard");
  verify_cmd->add_option("--jobs", jobs, "worker threads for exhaustive sweeps");
  verify_cmd->add_flag("--pretty", pretty, "human-readable output");

  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form q-polynomial");
  formula_cmd->add_option("--which", which_flag, "touchard | williams | cf-hermite | cf-laguerre")
      ->required();
  formula_cmd->add_option("--n", n, "index")->required();
  formula_cmd->add_flag("--pretty", pretty, "print only the polynomial");

  auto* distribution_cmd =
      app.add_subcommand("distribution", "Brute-force statistic distribution as a q-polynomial");
  distribution_cmd->add_option("--kind", kind_flag, "object kind")->required();
  distribution_cmd->add_option("--stat", stat_flag, "statistic name")->required();
  distribution_cmd->add_option("--n", n, "size parameter")->required();
  distribution_cmd->add_option("--cap", cap, "enumeration size guard");
  distribution_cmd->add_flag("--pretty", pretty, "print only the polynomial");

  auto* render_cmd = app.add_subcommand("render", "Draw objects as ASCII pictures");
  render_cmd->add_option("--input", input_flag, "object text (default: stdin, one per line)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(kind_flag, n, stats_flag, cap, pretty);
    if (map_cmd->parsed()) {
      if (diagnose) return cmd_diagnose_nadeau(max_n < 0 ? 6 : max_n, cap, pretty);
      if (kind_flag.empty()) throw ParseError("map requires --kind (target) or --diagnose-nadeau", 0);
      return cmd_map(kind_flag, input_flag, route_flag, pretty);
    }
    if (verify_cmd->parsed()) return cmd_verify(suite_flag, max_n, cap, jobs, pretty);
    if (formula_cmd->parsed()) return cmd_formula(which_flag, n, pretty);
    if (distribution_cmd->parsed()) return cmd_distribution(kind_flag, stat_flag, n, cap, pretty);
    if (render_cmd->parsed()) return cmd_render(input_flag);
    throw Error("no subcommand selected");
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
