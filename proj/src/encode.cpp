#include "pdsaw/encode.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pdsaw {

namespace {

constexpr const char* kPrefixes[] = {"sym", "asym", "match", "perm", "dyck", "motzkin"};

const char* prefix_of(Kind kind) { return kPrefixes[static_cast<int>(kind)]; }

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_spaces() {
    while (!done() && text[pos] == ' ') ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

  int read_int() {
    skip_spaces();
    std::size_t start = pos;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos;
    std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == digits) { pos = start; fail("expected integer"); }
    try {
      return std::stoi(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of range");
    }
  }

  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
};

// Strips "<prefix>:" and returns the body. Surrounding spaces are tolerated;
// the canonical form never contains them.
std::string body_after_prefix(const std::string& line, const char* prefix) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("missing ':' after kind prefix", line.size());
  if (line.substr(0, colon) != prefix)
    throw ParseError("expected prefix '" + std::string(prefix) + ":'", 0);
  return line.substr(colon + 1);
}

std::vector<int> parse_int_list(const std::string& body, char separator) {
  std::vector<int> values;
  Cursor cur{body};
  cur.skip_spaces();
  if (cur.done()) return values;
  while (true) {
    values.push_back(cur.read_int());
    cur.skip_spaces();
    if (cur.done()) break;
    if (separator != ' ') cur.expect(separator);
  }
  return values;
}

std::string join_ints(const std::vector<int>& values, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string render_text(const SymPdsaw& walk) { return "sym:" + join_ints(walk.ys, ","); }
std::string render_text(const AsymPdsaw& walk) { return "asym:" + join_ints(walk.ys, ","); }

std::string render_text(const Matching& matching) {
  std::string out = "match:";
  bool first = true;
  for (const auto& [p, q] : matching.pair_list()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p) + "-" + std::to_string(q);
  }
  return out;
}

std::string render_text(const Permutation& perm) { return "perm:" + join_ints(perm.images, " "); }

std::string render_text(const WeightedDyckPath& path) {
  std::string out = "dyck:";
  bool first = true;
  for (const auto& step : path.steps) {
    if (!first) out += " ";
    first = false;
    if (step.dir == DyckDir::Rise) out += "U";
    else out += "D" + std::to_string(step.weight);
  }
  return out;
}

std::string render_text(const WeightedMotzkinPath& path) {
  std::string out = "motzkin:";
  bool first = true;
  for (const auto& step : path.steps) {
    if (!first) out += " ";
    first = false;
    switch (step.kind) {
      case MotzkinKind::Rise: out += "U"; break;
      case MotzkinKind::Fall: out += "D"; break;
      case MotzkinKind::Level: out += "F"; break;
      case MotzkinKind::ColouredLevel: out += "C"; break;
    }
    out += std::to_string(step.weight);
  }
  return out;
}

std::string render_text(const Object& object) {
  return std::visit([](const auto& o) { return render_text(o); }, object);
}

SymPdsaw parse_sym_pdsaw(const std::string& line) {
  SymPdsaw walk{parse_int_list(body_after_prefix(line, "sym"), ',')};
  require_valid(walk);
  return walk;
}

AsymPdsaw parse_asym_pdsaw(const std::string& line) {
  AsymPdsaw walk{parse_int_list(body_after_prefix(line, "asym"), ',')};
  require_valid(walk);
  return walk;
}

Matching parse_matching(const std::string& line) {
  std::string body = body_after_prefix(line, "match");
  Cursor cur{body};
  std::vector<std::pair<int, int>> pairs;
  cur.skip_spaces();
  while (!cur.done()) {
    int p = cur.read_int();
    cur.skip_spaces();
    cur.expect('-');
    int q = cur.read_int();
    pairs.emplace_back(p, q);
    cur.skip_spaces();
    if (cur.done()) break;
    cur.expect(',');
  }
  int points = 2 * static_cast<int>(pairs.size());
  Matching matching{std::vector<int>(points, -1)};
  std::vector<std::string> problems;
  for (const auto& [p, q] : pairs) {
    if (p < 1 || p > points || q < 1 || q > points) {
      problems.push_back("point outside [1," + std::to_string(points) + "] in pair " +
                         std::to_string(p) + "-" + std::to_string(q));
      continue;
    }
    if (p == q) problems.push_back("pair " + std::to_string(p) + "-" + std::to_string(q) +
                                   " matches a point with itself");
    if (matching.partner[p - 1] != -1 || matching.partner[q - 1] != -1)
      problems.push_back("point repeated in pair " + std::to_string(p) + "-" + std::to_string(q));
    if (p != q) {
      matching.partner[p - 1] = q - 1;
      matching.partner[q - 1] = p - 1;
    }
  }
  for (int p = 0; p < points; ++p)
    if (matching.partner[p] == -1) {
      problems.push_back("point " + std::to_string(p + 1) + " unmatched");
      matching.partner[p] = p;  // placeholder so further checks stay in range
    }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  require_valid(matching);
  return matching;
}

Permutation parse_permutation(const std::string& line) {
  Permutation perm{parse_int_list(body_after_prefix(line, "perm"), ' ')};
  require_valid(perm);
  return perm;
}

WeightedDyckPath parse_weighted_dyck(const std::string& line) {
  std::string body = body_after_prefix(line, "dyck");
  Cursor cur{body};
  WeightedDyckPath path;
  cur.skip_spaces();
  while (!cur.done()) {
    char c = cur.peek();
    if (c == 'U') {
      ++cur.pos;
      path.steps.push_back({DyckDir::Rise, 0});
    } else if (c == 'D') {
      ++cur.pos;
      path.steps.push_back({DyckDir::Fall, cur.read_int()});
    } else {
      cur.fail("expected 'U' or 'D<w>' token");
    }
    cur.skip_spaces();
  }
  require_valid(path);
  return path;
}

WeightedMotzkinPath parse_weighted_motzkin(const std::string& line) {
  std::string body = body_after_prefix(line, "motzkin");
  Cursor cur{body};
  WeightedMotzkinPath path;
  cur.skip_spaces();
  while (!cur.done()) {
    MotzkinKind kind;
    switch (cur.peek()) {
      case 'U': kind = MotzkinKind::Rise; break;
      case 'D': kind = MotzkinKind::Fall; break;
      case 'F': kind = MotzkinKind::Level; break;
      case 'C': kind = MotzkinKind::ColouredLevel; break;
      default: cur.fail("expected 'U<w>', 'D<w>', 'F<w>' or 'C<w>' token");
    }
    ++cur.pos;
    path.steps.push_back({kind, cur.read_int()});
    cur.skip_spaces();
  }
  require_valid(path);
  return path;
}

Object parse_object(const std::string& line) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("missing ':' after kind prefix", line.size());
  std::string prefix = line.substr(0, colon);
  for (Kind kind : all_kinds())
    if (prefix == prefix_of(kind)) return parse_as(kind, line);
  throw ParseError("unknown object prefix '" + prefix + "'", 0);
}

Object parse_as(Kind kind, const std::string& line) {
  switch (kind) {
    case Kind::SymPdsaw: return parse_sym_pdsaw(line);
    case Kind::AsymPdsaw: return parse_asym_pdsaw(line);
    case Kind::Matching: return parse_matching(line);
    case Kind::Permutation: return parse_permutation(line);
    case Kind::WeightedDyck: return parse_weighted_dyck(line);
    case Kind::WeightedMotzkin: return parse_weighted_motzkin(line);
  }
  throw InternalError("unhandled kind");
}

}  // namespace pdsaw
