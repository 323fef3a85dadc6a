#include "pdsaw/qseries.hpp"

#include "pdsaw/stats.hpp"

namespace pdsaw {

QPoly touchard_riordan(int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  // Alternating binomial numerator, then exact division by (1-q)^n. The
  // division failing would mean the formula was evaluated wrongly.
  QPoly numerator;
  for (int i = 0; i <= n; ++i) {
    BigInt coeff = binomial(2 * n, n - i) - binomial(2 * n, n - i - 1);
    if (i % 2 == 1) coeff = -coeff;
    numerator += QPoly::term(coeff, static_cast<QPoly::Exp>(i) * (i + 1) / 2);
  }
  QPoly denominator = (QPoly(1) - QPoly::term(1, 1)).pow(static_cast<unsigned>(n));
  return div_exact(numerator, denominator);
}

QPoly williams(int n) {
  if (n < 1) throw DomainError("n must be positive");
  QPoly sum;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i <= k - 1; ++i) {
      QPoly term = q_integer(k - i).pow(static_cast<unsigned>(n));
      term = term * QPoly::term(1, static_cast<QPoly::Exp>(k) * i);  // q^{ki}
      QPoly bracket = QPoly::term(binomial(n, i), k - i) + QPoly(binomial(n, i - 1));
      term = term * bracket;
      term = term.shifted(-static_cast<QPoly::Exp>(k) * k);  // q^{-k^2}
      if (i % 2 == 1) sum -= term;
      else sum += term;
    }
  }
  if (!sum.is_zero() && !sum.is_polynomial())
    throw InternalError("negative exponents did not cancel");
  return sum;
}

namespace {

// Power series in x, truncated inclusively at `order`, with polynomial
// coefficients in q.
struct PolySeries {
  int order;
  std::vector<QPoly> c;

  explicit PolySeries(int order) : order(order), c(order + 1) {}

  static PolySeries one(int order) {
    PolySeries s(order);
    s.c[0] = QPoly(1);
    return s;
  }
};

PolySeries mul(const PolySeries& a, const PolySeries& b) {
  PolySeries result(a.order);
  for (int i = 0; i <= a.order; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order; ++j) {
      if (b.c[j].is_zero()) continue;
      result.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return result;
}

// 1 / (1 - u) with u of zero constant term.
PolySeries inverse_one_minus(const PolySeries& u) {
  if (!u.c[0].is_zero()) throw InternalError("series inverse needs zero constant term");
  PolySeries result = PolySeries::one(u.order);
  for (int k = 1; k <= u.order; ++k) {
    QPoly acc;
    for (int j = 1; j <= k; ++j) acc += u.c[j] * result.c[k - j];
    result.c[k] = acc;
  }
  return result;
}

PolySeries cf_hermite(int order, int depth) {
  PolySeries g = PolySeries::one(order);
  for (int level = depth; level >= 1; --level) {
    // g <- 1 / (1 - [level]_q x g)
    PolySeries u(order);
    for (int k = 1; k <= order; ++k) u.c[k] = q_integer(level) * g.c[k - 1];
    g = inverse_one_minus(u);
  }
  return g;
}

PolySeries cf_laguerre(int order, int depth) {
  PolySeries g = PolySeries::one(order);
  for (int level = depth; level >= 1; --level) {
    // g <- 1 / (1 - b_level x - [level]_q^2 x^2 g)
    QPoly b = level == 1 ? q_integer(1) : q_integer(level - 1) + q_integer(level);
    QPoly a2 = q_integer(level) * q_integer(level);
    PolySeries u(order);  // u = b x + [level]^2 x^2 g
    if (order >= 1) u.c[1] = b;
    for (int k = 2; k <= order; ++k) u.c[k] = a2 * g.c[k - 2];
    g = inverse_one_minus(u);
  }
  return g;
}

}  // namespace

QPoly cf_moments(MomentFamily family, int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  auto evaluate = [&](int depth) {
    return family == MomentFamily::Hermite ? cf_hermite(n, depth) : cf_laguerre(n, depth);
  };
  PolySeries at_depth = evaluate(n + 1);
  PolySeries deeper = evaluate(n + 2);
  for (int k = 0; k <= n; ++k)
    if (at_depth.c[k] != deeper.c[k])
      throw InternalError("continued fraction did not stabilise at depth n+1");
  return at_depth.c[n];
}

QPoly transfer_distribution(MomentFamily family, int n) {
  if (n < 0) throw DomainError("n must be non-negative");
  int steps = family == MomentFamily::Hermite ? 2 * n : n;
  int max_height = steps + 1;
  std::vector<QPoly> state(max_height + 2);
  state[0] = QPoly(1);
  for (int s = 0; s < steps; ++s) {
    std::vector<QPoly> next(state.size());
    for (int h = 0; h <= max_height; ++h) {
      if (state[h].is_zero()) continue;
      if (family == MomentFamily::Hermite) {
        if (h + 1 <= max_height) next[h + 1] += state[h];            // rise, weight 0
        if (h > 0) next[h - 1] += state[h] * q_integer(h);           // fall from h
      } else {
        if (h + 1 <= max_height) next[h + 1] += state[h] * q_integer(h + 1);  // rise to h+1
        if (h > 0) next[h - 1] += state[h] * q_integer(h);                    // fall to h-1
        next[h] += state[h] * q_integer(h + 1);                               // level at h
        if (h > 0) next[h] += state[h] * q_integer(h);                        // coloured level
      }
    }
    state.swap(next);
  }
  return state[0];
}

QPoly statistic_distribution(Kind kind, const std::string& stat, int n, std::uint64_t cap) {
  QPoly distribution;
  for (const Object& object : enumerate_objects(kind, n, cap)) {
    long long value = statistic_value(object, stat);
    distribution += QPoly::term(1, value);
  }
  return distribution;
}

}  // namespace pdsaw
