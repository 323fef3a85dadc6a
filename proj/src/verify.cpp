#include "pdsaw/verify.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "pdsaw/bijections.hpp"
#include "pdsaw/encode.hpp"
#include "pdsaw/qseries.hpp"
#include "pdsaw/rational_series.hpp"
#include "pdsaw/stats.hpp"

namespace pdsaw {

namespace {

std::string show(long long v) { return std::to_string(v); }
std::string show(int v) { return std::to_string(v); }
std::string show(const BigInt& v) { return v.str(); }
std::string show(const std::string& v) { return v; }

std::string show(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

template <typename A, typename B>
void expect_eq(VerifyReport& report, const std::string& input, const std::string& what,
               const A& expected, const B& actual) {
  if (!(expected == actual))
    report.failures.push_back({input, what + " = " + show(expected), show(actual)});
}

// Runs `check(object, chunk)` over every object, sharded across `jobs`
// threads. Failures are merged in chunk order so reports stay deterministic.
template <typename T, typename Check>
void sweep(const std::vector<T>& objects, int jobs, VerifyReport& report, Check check) {
  jobs = std::max(1, jobs);
  std::size_t count = objects.size();
  report.cases += count;
  if (jobs == 1 || count < 256) {
    for (const auto& object : objects) check(object, report);
    return;
  }
  std::vector<VerifyReport> chunks(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      std::size_t begin = count * w / jobs;
      std::size_t end = count * (w + 1) / jobs;
      for (std::size_t i = begin; i < end; ++i) check(objects[i], chunks[w]);
    });
  }
  for (auto& thread : threads) thread.join();
  for (const auto& chunk : chunks)
    report.failures.insert(report.failures.end(), chunk.failures.begin(), chunk.failures.end());
}

std::vector<int> doubled_reverse(std::vector<int> sizes) {
  std::reverse(sizes.begin(), sizes.end());
  for (int& s : sizes) s *= 2;
  return sizes;
}

std::vector<int> reversed(std::vector<int> sizes) {
  std::reverse(sizes.begin(), sizes.end());
  return sizes;
}

struct Bounds {
  int sym;   // size bound for the (2n-1)!! family
  int asym;  // size bound for the n! family
};

Bounds resolve(const VerifyOptions& options, Bounds defaults) {
  if (options.max_n >= 0) return {options.max_n, options.max_n};
  return defaults;
}

std::string params_string(const Bounds& bounds) {
  return "sym<=" + std::to_string(bounds.sym) + ",asym<=" + std::to_string(bounds.asym);
}

VerifyReport suite_counts(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"counts", params_string(bounds)};
  for (Kind kind : all_kinds()) {
    bool sym_family =
        kind == Kind::SymPdsaw || kind == Kind::Matching || kind == Kind::WeightedDyck;
    int bound = sym_family ? bounds.sym : bounds.asym;
    for (int n = 0; n <= bound; ++n) {
      auto objects = enumerate_objects(kind, n, options.cap);
      std::string input = kind_name(kind) + "/n=" + std::to_string(n);
      ++report.cases;
      expect_eq(report, input, "enumerated count", count(kind, n),
                BigInt(objects.size()));
      bool sorted = true, valid = true, reparses = true;
      std::string previous;
      for (std::size_t i = 0; i < objects.size(); ++i) {
        std::string text = render_text(objects[i]);
        if (i > 0 && !(previous < text)) sorted = false;
        previous = text;
        if (n <= 5) {
          if (!violations(objects[i]).empty()) valid = false;
          if (!(parse_object(text) == objects[i])) reparses = false;
        }
      }
      if (!sorted) report.failures.push_back({input, "canonical texts strictly increasing", "out of order"});
      if (!valid) report.failures.push_back({input, "all enumerated objects valid", "violations found"});
      if (!reparses) report.failures.push_back({input, "parse(render) = identity", "mismatch"});
    }
  }
  return report;
}

VerifyReport suite_roundtrip(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {6, 7});
  VerifyReport report{"roundtrip", params_string(bounds)};
  for (int n = 0; n <= bounds.sym; ++n) {
    sweep(enumerate_sym_pdsaws(n, options.cap), options.jobs, report,
          [](const SymPdsaw& walk, VerifyReport& r) {
            RuleTrace trace;
            auto path = sym_pdsaw_to_dyck(walk, &trace);
            std::string input = render_text(walk);
            expect_eq(r, input, "round trip", input, render_text(dyck_to_sym_pdsaw(path)));
            std::string why;
            if (!trace_respects_sym_automaton(trace, &why))
              r.failures.push_back({input, "trace accepted by the automaton", why});
          });
    sweep(enumerate_weighted_dyck(n, options.cap), options.jobs, report,
          [](const WeightedDyckPath& path, VerifyReport& r) {
            std::string input = render_text(path);
            expect_eq(r, input, "walk round trip", input,
                      render_text(sym_pdsaw_to_dyck(dyck_to_sym_pdsaw(path))));
            expect_eq(r, input, "matching round trip", input,
                      render_text(matching_to_dyck(dyck_to_matching(path))));
          });
    sweep(enumerate_matchings(n, options.cap), options.jobs, report,
          [](const Matching& matching, VerifyReport& r) {
            std::string input = render_text(matching);
            expect_eq(r, input, "round trip", input,
                      render_text(dyck_to_matching(matching_to_dyck(matching))));
          });
  }
  for (int n = 0; n <= bounds.asym; ++n) {
    sweep(enumerate_asym_pdsaws(n, options.cap), options.jobs, report,
          [](const AsymPdsaw& walk, VerifyReport& r) {
            RuleTrace trace;
            auto path = asym_pdsaw_to_motzkin(walk, &trace);
            std::string input = render_text(walk);
            expect_eq(r, input, "round trip", input, render_text(motzkin_to_asym_pdsaw(path)));
            expect_eq(r, input, "nadeau round trip", input,
                      render_text(nadeau_inverse(nadeau(walk))));
            std::string why;
            if (!trace_respects_asym_automaton(trace, &why))
              r.failures.push_back({input, "trace accepted by the automaton", why});
          });
    sweep(enumerate_weighted_motzkin(n, options.cap), options.jobs, report,
          [](const WeightedMotzkinPath& path, VerifyReport& r) {
            std::string input = render_text(path);
            expect_eq(r, input, "walk round trip", input,
                      render_text(asym_pdsaw_to_motzkin(motzkin_to_asym_pdsaw(path))));
            expect_eq(r, input, "permutation round trip", input,
                      render_text(perm_to_motzkin(motzkin_to_perm(path))));
          });
    sweep(enumerate_permutations(n, options.cap), options.jobs, report,
          [](const Permutation& perm, VerifyReport& r) {
            std::string input = render_text(perm);
            expect_eq(r, input, "round trip", input,
                      render_text(motzkin_to_perm(perm_to_motzkin(perm))));
            expect_eq(r, input, "nadeau round trip", input,
                      render_text(nadeau(nadeau_inverse(perm))));
          });
  }
  return report;
}

VerifyReport suite_thm1(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {6, 6});
  VerifyReport report{"thm1", "sym<=" + std::to_string(bounds.sym)};
  for (int n = 0; n <= bounds.sym; ++n) {
    sweep(enumerate_sym_pdsaws(n, options.cap), options.jobs, report,
          [](const SymPdsaw& walk, VerifyReport& r) {
            auto matching = dyck_to_matching(sym_pdsaw_to_dyck(walk));
            std::string input = render_text(walk);
            expect_eq(r, input, "nestings = north steps", north_steps(walk), nestings(matching));
            if (walk.east_steps() > 0)
              expect_eq(r, input, "partner(1) - 1 = last descent", last_descent(walk),
                        matching.partner_of(1) - 1);
            expect_eq(r, input, "crossing parity = area parity", area_sym(walk) % 2,
                      crossings(matching) % 2);
            expect_eq(r, input, "matching factors = doubled reversed walk factors",
                      doubled_reverse(factor_sizes(walk)), factor_sizes(matching));
          });
  }
  return report;
}

VerifyReport suite_thm2(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"thm2", "asym<=" + std::to_string(bounds.asym)};
  for (int n = 0; n <= bounds.asym; ++n) {
    sweep(enumerate_asym_pdsaws(n, options.cap), options.jobs, report,
          [](const AsymPdsaw& walk, VerifyReport& r) {
            auto perm = motzkin_to_perm(asym_pdsaw_to_motzkin(walk));
            std::string input = render_text(walk);
            expect_eq(r, input, "nestings = north steps", north_steps(walk), nestings(perm));
            if (walk.east_steps() > 0)
              expect_eq(r, input, "sigma(1) = last descent", last_descent(walk), perm.image(1));
            expect_eq(r, input, "permutation factors = reversed walk factors",
                      reversed(factor_sizes(walk)), factor_sizes(perm));
          });
  }
  return report;
}

VerifyReport suite_thm3(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"thm3", "asym<=" + std::to_string(bounds.asym)};
  for (int n = 0; n <= bounds.asym; ++n) {
    sweep(enumerate_asym_pdsaws(n, options.cap), options.jobs, report,
          [](const AsymPdsaw& walk, VerifyReport& r) {
            auto perm = nadeau(walk);
            std::string input = render_text(walk);
            expect_eq(r, input, "31-2 occurrences = north steps", north_steps(walk),
                      pattern_31_2(perm));
            if (walk.east_steps() > 0)
              expect_eq(r, input, "sigma(1) = last descent", last_descent(walk), perm.image(1));
            expect_eq(r, input, "permutation factors = reversed walk factors",
                      reversed(factor_sizes(walk)), factor_sizes(perm));
          });
  }
  return report;
}

VerifyReport suite_kz(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {6, 7});
  VerifyReport report{"kz", params_string(bounds)};
  for (int n = 0; n <= bounds.sym; ++n) {
    sweep(enumerate_matchings(n, options.cap), options.jobs, report,
          [](const Matching& matching, VerifyReport& r) {
            auto path = matching_to_dyck(matching);
            std::string input = render_text(matching);
            expect_eq(r, input, "total weight = nestings", nestings(matching), total_weight(path));
            expect_eq(r, input, "complementary weight = crossings", crossings(matching),
                      complementary_weight(path));
            expect_eq(r, input, "factors preserved", factor_sizes(matching), factor_sizes(path));
          });
  }
  for (int n = 0; n <= bounds.asym; ++n) {
    sweep(enumerate_permutations(n, options.cap), options.jobs, report,
          [](const Permutation& perm, VerifyReport& r) {
            auto path = perm_to_motzkin(perm);
            std::string input = render_text(perm);
            expect_eq(r, input, "total weight = nestings", nestings(perm), total_weight(path));
            expect_eq(r, input, "complementary weight = crossings", crossings(perm),
                      complementary_weight(path));
            expect_eq(r, input, "factors preserved", factor_sizes(perm), factor_sizes(path));
          });
  }
  return report;
}

VerifyReport suite_fz(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {6, 7});
  VerifyReport report{"fz", params_string(bounds)};
  for (int n = 1; n <= bounds.sym; ++n) {
    sweep(enumerate_matchings(n, options.cap), options.jobs, report,
          [](const Matching& matching, VerifyReport& r) {
            expect_eq(r, render_text(matching), "first zero fall = partner(1)",
                      matching.partner_of(1), first_zero_position(matching_to_dyck(matching)));
          });
    sweep(enumerate_sym_pdsaws(n, options.cap), options.jobs, report,
          [](const SymPdsaw& walk, VerifyReport& r) {
            expect_eq(r, render_text(walk), "first zero fall = last descent + 1",
                      last_descent(walk) + 1, first_zero_position(sym_pdsaw_to_dyck(walk)));
          });
  }
  for (int n = 1; n <= bounds.asym; ++n) {
    sweep(enumerate_permutations(n, options.cap), options.jobs, report,
          [](const Permutation& perm, VerifyReport& r) {
            expect_eq(r, render_text(perm), "first zero closer = sigma(1)", perm.image(1),
                      first_zero_position(perm_to_motzkin(perm)));
          });
    sweep(enumerate_asym_pdsaws(n, options.cap), options.jobs, report,
          [](const AsymPdsaw& walk, VerifyReport& r) {
            expect_eq(r, render_text(walk), "first zero closer = last descent",
                      last_descent(walk), first_zero_position(asym_pdsaw_to_motzkin(walk)));
          });
  }
  return report;
}

VerifyReport suite_touchard(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"touchard", "n<=" + std::to_string(bounds.sym)};
  for (int n = 0; n <= bounds.sym; ++n) {
    QPoly reference = touchard_riordan(n);
    std::string input = "n=" + std::to_string(n);
    report.cases += 4;
    expect_eq(report, input, "transfer(hermite) = " + reference.str(), reference.str(),
              transfer_distribution(MomentFamily::Hermite, n).str());
    expect_eq(report, input, "nesting distribution of matchings", reference.str(),
              statistic_distribution(Kind::Matching, "nestings", n, options.cap).str());
    expect_eq(report, input, "north distribution of sym walks", reference.str(),
              statistic_distribution(Kind::SymPdsaw, "north", n, options.cap).str());
    expect_eq(report, input, "value at q=1", count(Kind::Matching, n), reference.eval_one());
  }
  return report;
}

VerifyReport suite_williams(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"williams", "n<=" + std::to_string(bounds.asym)};
  for (int n = 1; n <= bounds.asym; ++n) {
    QPoly reference = williams(n);
    std::string input = "n=" + std::to_string(n);
    report.cases += 5;
    expect_eq(report, input, "transfer(laguerre) = " + reference.str(), reference.str(),
              transfer_distribution(MomentFamily::Laguerre, n).str());
    expect_eq(report, input, "nesting distribution of permutations", reference.str(),
              statistic_distribution(Kind::Permutation, "nestings", n, options.cap).str());
    expect_eq(report, input, "north distribution of asym walks", reference.str(),
              statistic_distribution(Kind::AsymPdsaw, "north", n, options.cap).str());
    expect_eq(report, input, "31-2 distribution of permutations", reference.str(),
              statistic_distribution(Kind::Permutation, "pattern31_2", n, options.cap).str());
    expect_eq(report, input, "value at q=1", count(Kind::Permutation, n), reference.eval_one());
  }
  return report;
}

VerifyReport suite_cf(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {7, 7});
  VerifyReport report{"cf", "n<=" + std::to_string(bounds.sym)};
  for (int n = 0; n <= bounds.sym; ++n) {
    std::string input = "n=" + std::to_string(n);
    ++report.cases;
    expect_eq(report, input, "hermite continued fraction = closed form",
              touchard_riordan(n).str(), cf_moments(MomentFamily::Hermite, n).str());
    if (n >= 1) {
      ++report.cases;
      expect_eq(report, input, "laguerre continued fraction = closed form", williams(n).str(),
                cf_moments(MomentFamily::Laguerre, n).str());
    }
  }
  ++report.cases;
  expect_eq(report, "n=0", "laguerre continued fraction at n=0", std::string("1"),
            cf_moments(MomentFamily::Laguerre, 0).str());
  return report;
}

VerifyReport suite_free_gf(const VerifyOptions& options) {
  int order = options.max_n >= 0 ? options.max_n : 18;
  VerifyReport report{"free-gf", "order<=" + std::to_string(order)};
  auto series = free_walk_series(order).integer_coefficients();
  auto dp = count_free_sym_walks(order);
  static const long long prefix[] = {1, 1, 3, 5, 13};
  for (int s = 0; s <= order; ++s) {
    ++report.cases;
    std::string input = "t^" + std::to_string(s);
    expect_eq(report, input, "series coefficient = walk count", dp[s], series[s]);
    if (s < 5) expect_eq(report, input, "series prefix", BigInt(prefix[s]), series[s]);
  }
  return report;
}

VerifyReport suite_symmetry(const VerifyOptions& options) {
  Bounds bounds = resolve(options, {6, 6});
  VerifyReport report{"symmetry", params_string(bounds)};
  auto check_family = [&](Kind kind, int bound) {
    for (int n = 0; n <= bound; ++n) {
      std::map<std::pair<long long, long long>, long long> joint;
      for (const Object& object : enumerate_objects(kind, n, options.cap)) {
        ++report.cases;
        joint[{statistic_value(object, "crossings"), statistic_value(object, "nestings")}]++;
      }
      for (const auto& [pair, occurrences] : joint) {
        auto swapped = joint.find({pair.second, pair.first});
        long long mirrored = swapped == joint.end() ? 0 : swapped->second;
        if (mirrored != occurrences)
          report.failures.push_back(
              {kind_name(kind) + "/n=" + std::to_string(n) + " (cr,ne)=(" +
                   std::to_string(pair.first) + "," + std::to_string(pair.second) + ")",
               show(occurrences) + " objects", show(mirrored) + " mirrored objects"});
      }
    }
  };
  check_family(Kind::Matching, bounds.sym);
  check_family(Kind::Permutation, bounds.asym);
  return report;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "counts", "roundtrip", "thm1",     "thm2", "thm3",    "kz",
      "fz",     "touchard",  "williams", "cf",   "free-gf", "symmetry",
  };
  return names;
}

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "counts") return suite_counts(options);
  if (suite == "roundtrip") return suite_roundtrip(options);
  if (suite == "thm1") return suite_thm1(options);
  if (suite == "thm2") return suite_thm2(options);
  if (suite == "thm3") return suite_thm3(options);
  if (suite == "kz") return suite_kz(options);
  if (suite == "fz") return suite_fz(options);
  if (suite == "touchard") return suite_touchard(options);
  if (suite == "williams") return suite_williams(options);
  if (suite == "cf") return suite_cf(options);
  if (suite == "free-gf") return suite_free_gf(options);
  if (suite == "symmetry") return suite_symmetry(options);
  throw Error("unknown verify suite '" + suite + "'");
}

std::vector<VerifyReport> run_all_suites(const VerifyOptions& options) {
  std::vector<VerifyReport> reports;
  reports.reserve(verify_suite_names().size());
  for (const auto& suite : verify_suite_names())
    reports.push_back(run_verify_suite(suite, options));
  return reports;
}

}  // namespace pdsaw
