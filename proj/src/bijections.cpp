#include "pdsaw/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pdsaw {

WeightedDyckPath matching_to_dyck(const Matching& matching) {
  require_valid(matching);
  WeightedDyckPath path;
  path.steps.reserve(matching.points());
  std::vector<int> open;  // open openers, kept sorted ascending
  for (int p = 0; p < matching.points(); ++p) {
    int q = matching.partner[p];
    if (q > p) {
      open.insert(std::lower_bound(open.begin(), open.end(), p), p);
      path.steps.push_back({DyckDir::Rise, 0});
    } else {
      auto it = std::lower_bound(open.begin(), open.end(), q);
      int weight = static_cast<int>(it - open.begin());  // open openers below q
      open.erase(it);
      path.steps.push_back({DyckDir::Fall, weight});
    }
  }
  return path;
}

Matching dyck_to_matching(const WeightedDyckPath& path) {
  require_valid(path);
  Matching matching{std::vector<int>(path.steps.size(), -1)};
  std::vector<int> open;
  for (int p = 0; p < static_cast<int>(path.steps.size()); ++p) {
    const auto& step = path.steps[p];
    if (step.dir == DyckDir::Rise) {
      open.push_back(p);  // positions arrive in increasing order
    } else {
      // match p with the (weight+1)-th smallest open opener
      int o = open.at(step.weight);
      open.erase(open.begin() + step.weight);
      matching.partner[p] = o;
      matching.partner[o] = p;
    }
  }
  return matching;
}

namespace {

int first_zero_fall(const std::vector<DyckStep>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i].dir == DyckDir::Fall && steps[i].weight == 0)
      return static_cast<int>(i) + 1;
  throw InternalError("Dyck path without zero-weight fall");
}

bool is_rise(const DyckStep& s) { return s.dir == DyckDir::Rise; }

// One raise of the walk's last east step, acting on the steps at positions
// (M-1, M, M+1) around the first zero-weight fall M. Exactly one rule
// matches; returns its label.
std::string apply_sym_rule(std::vector<DyckStep>& steps, int m) {
  if (m < 2 || m >= static_cast<int>(steps.size()))
    throw InternalError("sym rule position out of range");
  DyckStep& a = steps[m - 2];
  DyckStep& b = steps[m - 1];
  DyckStep& c = steps[m];
  if (b.dir != DyckDir::Fall || b.weight != 0)
    throw InternalError("step at M is not a zero-weight fall");
  if (is_rise(a)) {
    if (is_rise(c)) {  // (I) R F0 R -> R R F0
      std::swap(b, c);
      return "I";
    }
    if (c.weight > 0) {  // (II) R F0 Fk -> Fk R F0
      DyckStep fall = c;
      c = b;
      b = a;
      a = fall;
      return "II";
    }
    b.weight = 1;  // (III) R F0 F0 -> R F1 F0
    return "III";
  }
  if (c.dir == DyckDir::Fall) {  // (IV) Fl F0 Fk -> Fl F(k+1) F0
    b.weight = c.weight + 1;
    c.weight = 0;
    return "IV";
  }
  // (V) Fk F0 R -> R F(k+1) F0
  int k = a.weight;
  a = {DyckDir::Rise, 0};
  b = {DyckDir::Fall, k + 1};
  c = {DyckDir::Fall, 0};
  return "V";
}

// Inverse rule keyed on positions (M-2, M-1, M); used while M >= 3.
void undo_sym_rule(std::vector<DyckStep>& steps, int m) {
  DyckStep& a = steps[m - 3];
  DyckStep& b = steps[m - 2];
  DyckStep& c = steps[m - 1];
  if (c.dir != DyckDir::Fall || c.weight != 0)
    throw InternalError("step at M is not a zero-weight fall");
  if (is_rise(b)) {
    if (is_rise(a)) {  // (I)^-1: R R F0 -> R F0 R
      std::swap(b, c);
    } else {  // (II)^-1: Fk R F0 -> R F0 Fk
      DyckStep fall = a;
      a = b;
      b = c;
      c = fall;
    }
    return;
  }
  if (is_rise(a)) {
    if (b.weight == 1) {  // (III)^-1: R F1 F0 -> R F0 F0
      b.weight = 0;
    } else if (b.weight >= 2) {  // (V)^-1: R Fw F0 -> F(w-1) F0 R
      int w = b.weight;
      a = {DyckDir::Fall, w - 1};
      b = {DyckDir::Fall, 0};
      c = {DyckDir::Rise, 0};
    } else {
      throw InternalError("middle fall of weight 0 in inverse rule dispatch");
    }
    return;
  }
  if (b.weight >= 1) {  // (IV)^-1: Fl Fw F0 -> Fl F0 F(w-1)
    c.weight = b.weight - 1;
    b.weight = 0;
  } else {
    throw InternalError("no inverse sym rule matches");
  }
}

}  // namespace

WeightedDyckPath sym_pdsaw_to_dyck(const SymPdsaw& walk, RuleTrace* trace) {
  require_valid(walk);
  if (trace) trace->applied.clear();
  std::vector<DyckStep> steps;
  for (int i = 1; i <= walk.east_steps(); ++i) {
    steps.insert(steps.begin(), {{DyckDir::Rise, 0}, {DyckDir::Fall, 0}});
    int raises = walk.ys[i - 1] + i - 1;
    for (int r = 0; r < raises; ++r) {
      int m = first_zero_fall(steps);
      std::string rule = apply_sym_rule(steps, m);
      if (trace) trace->applied.push_back({rule, m});
      if (first_zero_fall(steps) != m + 1)
        throw InternalError("first zero fall did not advance by one");
    }
  }
  return WeightedDyckPath{std::move(steps)};
}

SymPdsaw dyck_to_sym_pdsaw(const WeightedDyckPath& path) {
  require_valid(path);
  std::vector<DyckStep> steps = path.steps;
  int n = path.falls();
  if (static_cast<int>(steps.size()) != 2 * n)
    throw InternalError("Dyck path with unbalanced steps");
  SymPdsaw walk;
  walk.ys.assign(n, 0);
  for (int i = n; i >= 1; --i) {
    int m = first_zero_fall(steps);
    int raises = 0;
    while (m >= 3) {
      undo_sym_rule(steps, m);
      ++raises;
      int back = first_zero_fall(steps);
      if (back != m - 1) throw InternalError("first zero fall did not retreat by one");
      m = back;
    }
    if (steps.size() < 2 || !is_rise(steps[0]) || steps[1].dir != DyckDir::Fall ||
        steps[1].weight != 0)
      throw InternalError("expected leading rise-fall pair after unwinding");
    steps.erase(steps.begin(), steps.begin() + 2);
    walk.ys[i - 1] = -(i - 1) + raises;
  }
  if (!steps.empty()) throw InternalError("leftover steps after unwinding");
  return walk;
}

WeightedMotzkinPath perm_to_motzkin(const Permutation& perm) {
  require_valid(perm);
  int n = perm.size();
  auto inv = perm.inverse_images();
  WeightedMotzkinPath path;
  path.steps.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int si = perm.image(i);
    int pi = inv[i - 1];  // sigma^{-1}(i)
    MotzkinKind kind;
    if (i < std::min(si, pi)) kind = MotzkinKind::Rise;
    else if (i > std::max(si, pi)) kind = MotzkinKind::Fall;
    else if (pi <= i && i <= si) kind = MotzkinKind::Level;
    else kind = MotzkinKind::ColouredLevel;
    // weight = number of arcs nesting the arc (sigma^{-1}(i), i)
    int weight = 0;
    for (int j = 1; j <= n; ++j) {
      if (j == pi) continue;
      int sj = perm.image(j);
      if ((j < pi && pi <= i && i < sj) || (j > pi && pi > i && i > sj)) ++weight;
    }
    path.steps.push_back({kind, weight});
  }
  return path;
}

Permutation motzkin_to_perm(const WeightedMotzkinPath& path) {
  require_valid(path);
  int n = path.size();
  std::vector<int> images(n, 0);

  auto take = [](std::vector<int>& pending, int index) {
    if (index < 0 || index >= static_cast<int>(pending.size()))
      throw InternalError("selection out of range");
    int value = pending[index];
    pending.erase(pending.begin() + index);
    return value;
  };

  // Upper arcs (sources are rises and levels, targets falls and levels),
  // resolved left to right: the weight counts pending sources below the true
  // source, so the source is the (weight+1)-th smallest.
  {
    std::vector<int> pending;  // sorted ascending; positions arrive in order
    for (int i = 1; i <= n; ++i) {
      const auto& step = path.steps[i - 1];
      if (step.kind == MotzkinKind::Rise) {
        pending.push_back(i);
      } else if (step.kind == MotzkinKind::Level) {
        pending.push_back(i);  // a level may close its own arc (fixed point)
        int source = take(pending, step.weight);
        images[source - 1] = i;
      } else if (step.kind == MotzkinKind::Fall) {
        int source = take(pending, step.weight);
        images[source - 1] = i;
      }
    }
    if (!pending.empty()) throw InternalError("unclosed upper sources");
  }

  // Lower arcs (sources are falls and coloured levels, targets rises and
  // coloured levels), resolved right to left with the (weight+1)-th largest
  // pending source. A coloured level closes its incoming arc before it
  // registers as a source.
  {
    std::vector<int> pending;  // sorted descending; positions arrive in order
    for (int i = n; i >= 1; --i) {
      const auto& step = path.steps[i - 1];
      if (step.kind == MotzkinKind::Fall) {
        pending.push_back(i);
      } else if (step.kind == MotzkinKind::ColouredLevel) {
        int source = take(pending, step.weight);
        images[source - 1] = i;
        pending.push_back(i);
      } else if (step.kind == MotzkinKind::Rise) {
        int source = take(pending, step.weight);
        images[source - 1] = i;
      }
    }
    if (!pending.empty()) throw InternalError("unclosed lower sources");
  }

  Permutation perm{std::move(images)};
  require_valid(perm);
  return perm;
}

namespace {

bool is_level0(const MotzkinStep& s) { return s.kind == MotzkinKind::Level && s.weight == 0; }
bool is_fall0(const MotzkinStep& s) { return s.kind == MotzkinKind::Fall && s.weight == 0; }

int first_zero_closer(const std::vector<MotzkinStep>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto kind = steps[i].kind;
    if ((kind == MotzkinKind::Fall || kind == MotzkinKind::Level) && steps[i].weight == 0)
      return static_cast<int>(i) + 1;
  }
  throw InternalError("Motzkin path without zero-weight closer");
}

std::string apply_asym_rule(std::vector<MotzkinStep>& steps, int m) {
  if (m < 1 || m >= static_cast<int>(steps.size()))
    throw InternalError("asym rule position out of range");
  MotzkinStep& a = steps[m - 1];
  MotzkinStep& b = steps[m];
  if (is_level0(a)) {
    if (is_level0(b)) {  // (ii) F0 F0 -> U0 D0
      a = {MotzkinKind::Rise, 0};
      b = {MotzkinKind::Fall, 0};
      return "ii";
    }
    if (is_fall0(b)) {  // (iii) F0 D0 -> C0 D0
      a = {MotzkinKind::ColouredLevel, 0};
      return "iii";
    }
    std::swap(a, b);  // (i) exchange
    return "i";
  }
  if (is_fall0(a)) {  // (iv) D0 X(w) -> X(w+1) D0
    a = {b.kind, b.weight + 1};
    b = {MotzkinKind::Fall, 0};
    return "iv";
  }
  throw InternalError("step at M is not a zero-weight closer");
}

void undo_asym_rule(std::vector<MotzkinStep>& steps, int m) {
  MotzkinStep& a = steps[m - 2];
  MotzkinStep& b = steps[m - 1];
  if (is_level0(b)) {  // (i)^-1
    if (is_level0(a) || is_fall0(a))
      throw InternalError("ambiguous inverse for rule (i)");
    std::swap(a, b);
    return;
  }
  if (!is_fall0(b)) throw InternalError("step at M is not a zero-weight closer");
  if (a.kind == MotzkinKind::Rise && a.weight == 0) {  // (ii)^-1
    a = {MotzkinKind::Level, 0};
    b = {MotzkinKind::Level, 0};
    return;
  }
  if (a.kind == MotzkinKind::ColouredLevel && a.weight == 0) {  // (iii)^-1
    a = {MotzkinKind::Level, 0};
    return;
  }
  if (a.weight >= 1) {  // (iv)^-1: X(w) D0 -> D0 X(w-1)
    b = {a.kind, a.weight - 1};
    a = {MotzkinKind::Fall, 0};
    return;
  }
  throw InternalError("no inverse asym rule matches");
}

}  // namespace

WeightedMotzkinPath asym_pdsaw_to_motzkin(const AsymPdsaw& walk, RuleTrace* trace) {
  require_valid(walk);
  if (trace) trace->applied.clear();
  std::vector<MotzkinStep> steps;
  for (int i = 1; i <= walk.east_steps(); ++i) {
    steps.insert(steps.begin(), {MotzkinKind::Level, 0});
    int raises = walk.ys[i - 1] + i - 1;
    for (int r = 0; r < raises; ++r) {
      int m = first_zero_closer(steps);
      std::string rule = apply_asym_rule(steps, m);
      if (trace) trace->applied.push_back({rule, m});
      if (first_zero_closer(steps) != m + 1)
        throw InternalError("first zero closer did not advance by one");
    }
  }
  return WeightedMotzkinPath{std::move(steps)};
}

AsymPdsaw motzkin_to_asym_pdsaw(const WeightedMotzkinPath& path) {
  require_valid(path);
  std::vector<MotzkinStep> steps = path.steps;
  int n = path.size();
  AsymPdsaw walk;
  walk.ys.assign(n, 0);
  for (int i = n; i >= 1; --i) {
    int m = first_zero_closer(steps);
    int raises = 0;
    while (m >= 2) {
      undo_asym_rule(steps, m);
      ++raises;
      int back = first_zero_closer(steps);
      if (back != m - 1) throw InternalError("first zero closer did not retreat by one");
      m = back;
    }
    if (steps.empty() || !is_level0(steps[0]))
      throw InternalError("expected a leading plain level step after unwinding");
    steps.erase(steps.begin());
    walk.ys[i - 1] = -(i - 1) + raises;
  }
  if (!steps.empty()) throw InternalError("leftover steps after unwinding");
  return walk;
}

Permutation nadeau(const AsymPdsaw& walk) {
  require_valid(walk);
  int n = walk.east_steps();
  std::vector<int> remaining(n);
  for (int v = 0; v < n; ++v) remaining[v] = v + 1;  // ascending
  Permutation perm{std::vector<int>(n, 0)};
  for (int i = 1; i <= n; ++i) {
    int h = 1 - walk.ys[n - i];  // 1 minus the (n-i+1)-st east step height
    int index = static_cast<int>(remaining.size()) - h;  // h-th largest
    if (index < 0 || index >= static_cast<int>(remaining.size()))
      throw InternalError("rank outside remaining set");
    perm.images[i - 1] = remaining[index];
    remaining.erase(remaining.begin() + index);
  }
  return perm;
}

AsymPdsaw nadeau_inverse(const Permutation& perm) {
  require_valid(perm);
  int n = perm.size();
  std::vector<int> remaining(n);
  for (int v = 0; v < n; ++v) remaining[v] = v + 1;
  AsymPdsaw walk;
  walk.ys.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    auto it = std::lower_bound(remaining.begin(), remaining.end(), perm.image(i));
    if (it == remaining.end() || *it != perm.image(i))
      throw InternalError("image not in remaining set");
    int h = static_cast<int>(remaining.end() - it);  // rank from the top
    walk.ys[n - i] = 1 - h;
    remaining.erase(it);
  }
  return walk;
}

namespace {

bool check_trace(const RuleTrace& trace, int reset_at,
                 const std::map<std::string, std::set<std::string>>& edges,
                 const std::set<std::string>& starts, std::string* why) {
  auto explain = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  const RuleApplication* prev = nullptr;
  for (const auto& app : trace.applied) {
    if (!edges.count(app.rule)) return explain("unknown rule label '" + app.rule + "'");
    bool fresh = prev == nullptr || app.at == reset_at;
    if (fresh) {
      if (app.at != reset_at)
        return explain("sequence starts at position " + std::to_string(app.at));
      if (!starts.count(app.rule))
        return explain("sequence starts with rule " + app.rule);
    } else {
      if (app.at != prev->at + 1)
        return explain("position " + std::to_string(app.at) + " does not follow " +
                       std::to_string(prev->at));
      if (!edges.at(prev->rule).count(app.rule))
        return explain("edge " + prev->rule + " -> " + app.rule + " not in the automaton");
    }
    prev = &app;
  }
  return true;
}

}  // namespace

bool trace_respects_sym_automaton(const RuleTrace& trace, std::string* why) {
  static const std::map<std::string, std::set<std::string>> edges = {
      {"I", {"I", "II", "III"}},  {"II", {"I", "II", "III"}}, {"III", {"IV", "V"}},
      {"IV", {"IV", "V"}},        {"V", {"IV", "V"}},
  };
  // Every raise sequence opens on the freshly prepended rise-fall pair, whose
  // successor step is a rise, so rule I always fires first.
  static const std::set<std::string> starts = {"I"};
  return check_trace(trace, 2, edges, starts, why);
}

bool trace_respects_asym_automaton(const RuleTrace& trace, std::string* why) {
  static const std::map<std::string, std::set<std::string>> edges = {
      {"i", {"i", "ii", "iii"}}, {"ii", {"iv"}}, {"iii", {"iv"}}, {"iv", {"iv"}},
  };
  static const std::set<std::string> starts = {"i", "ii"};
  return check_trace(trace, 1, edges, starts, why);
}

}  // namespace pdsaw
