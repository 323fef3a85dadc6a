#include "pdsaw/rational_series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pdsaw {

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw DomainError("order must be non-negative");
  c_.assign(order + 1, BigRat(0));
}

RationalSeries RationalSeries::constant(const BigRat& value, int order) {
  RationalSeries s(order);
  s.c_[0] = value;
  return s;
}

RationalSeries RationalSeries::monomial(const BigRat& value, int degree, int order) {
  RationalSeries s(order);
  if (degree <= order) s.c_[degree] = value;
  return s;
}

const BigRat& RationalSeries::at(int k) const {
  if (k < 0 || k > order()) throw DomainError("coefficient index out of range");
  return c_[k];
}

void RationalSeries::set(int k, const BigRat& value) {
  if (k < 0 || k > order()) throw DomainError("coefficient index out of range");
  c_[k] = value;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  if (other.order() != order()) throw DomainError("order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] += other.c_[k];
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
  if (other.order() != order()) throw DomainError("order mismatch");
  for (int k = 0; k <= order(); ++k) c_[k] -= other.c_[k];
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) throw DomainError("order mismatch");
  RationalSeries result(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.c_[j] == 0) continue;
      result.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return result;
}

RationalSeries RationalSeries::scaled(const BigRat& factor) const {
  RationalSeries result = *this;
  for (auto& coeff : result.c_) coeff *= factor;
  return result;
}

RationalSeries RationalSeries::inverse() const {
  if (c_[0] == 0) throw DomainError("series with zero constant term has no inverse");
  RationalSeries result(order());
  result.c_[0] = BigRat(1) / c_[0];
  for (int k = 1; k <= order(); ++k) {
    BigRat acc = 0;
    for (int j = 1; j <= k; ++j) acc += c_[j] * result.c_[k - j];
    result.c_[k] = -acc / c_[0];
  }
  return result;
}

RationalSeries RationalSeries::sqrt() const {
  if (c_[0] != 1) throw DomainError("series square root requires constant term 1");
  // Solve f^2 = this coefficient by coefficient: the t^k coefficient of f^2
  // is 2 f_0 f_k plus a convolution of lower-order terms.
  RationalSeries f(order());
  f.c_[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    BigRat conv = 0;
    for (int j = 1; j < k; ++j) conv += f.c_[j] * f.c_[k - j];
    f.c_[k] = (c_[k] - conv) / 2;
  }
  return f;
}

RationalSeries RationalSeries::shift_down(int k) const {
  for (int j = 0; j < k && j <= order(); ++j)
    if (c_[j] != 0)
      throw DomainError("cannot divide by t^" + std::to_string(k) +
                        ": coefficient of t^" + std::to_string(j) + " is nonzero");
  if (k > order()) throw DomainError("shift exceeds the truncation order");
  RationalSeries result(order() - k);
  for (int j = 0; j <= result.order(); ++j) result.c_[j] = c_[j + k];
  return result;
}

bool RationalSeries::integral() const {
  for (const auto& coeff : c_)
    if (boost::multiprecision::denominator(coeff) != 1) return false;
  return true;
}

std::vector<BigInt> RationalSeries::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (int k = 0; k <= order(); ++k) {
    if (boost::multiprecision::denominator(c_[k]) != 1)
      throw DomainError("non-integral coefficient at t^" + std::to_string(k));
    out.push_back(BigInt(boost::multiprecision::numerator(c_[k])));
  }
  return out;
}

RationalSeries free_walk_series(int order) {
  // Work a few coefficients past the target so the shift by t keeps enough
  // terms; everything is truncated back at the end.
  int work = order + 2;
  RationalSeries t = RationalSeries::monomial(1, 1, work);
  RationalSeries t2 = RationalSeries::monomial(1, 2, work);
  RationalSeries one = RationalSeries::constant(1, work);

  RationalSeries radicand = (one - t2) * (one - RationalSeries::monomial(5, 2, work));
  RationalSeries p = radicand.sqrt();

  // Q = (1 - 3t^2 - P) / 2t; the constant and linear coefficients of the
  // numerator must vanish for the division to be exact.
  RationalSeries q_num = one - RationalSeries::monomial(3, 2, work) - p;
  if (q_num.at(0) != 0 || q_num.at(1) != 0)
    throw InternalError("inexact division by 2t");
  RationalSeries q_shifted = q_num.shift_down(1).scaled(BigRat(1, 2));
  // Re-pad to the working order (shift_down reduced it by one).
  RationalSeries q(work);
  for (int k = 0; k <= q_shifted.order() && k <= work; ++k) q.set(k, q_shifted.at(k));

  // sum_{n >= 0} (-1)^n t^(n^2) Q^n while n^2 is within range
  RationalSeries series_sum(work);
  RationalSeries q_power = RationalSeries::constant(1, work);
  for (int n = 0; static_cast<long long>(n) * n <= work; ++n) {
    if (n > 0) q_power = q_power * q;
    RationalSeries term = q_power * RationalSeries::monomial(1, n * n, work);
    if (n % 2 == 1) series_sum -= term;
    else series_sum += term;
  }

  RationalSeries numerator = (one + t) * t - (one - t2 - p) * series_sum;
  if (numerator.at(0) != 0) throw InternalError("closed form numerator not divisible by t");
  RationalSeries shifted = numerator.shift_down(1);

  RationalSeries denominator(shifted.order());
  denominator.set(0, 1);
  if (shifted.order() >= 1) denominator.set(1, -2);
  if (shifted.order() >= 2) denominator.set(2, -1);
  RationalSeries full = shifted * denominator.inverse();

  RationalSeries result(order);
  for (int k = 0; k <= order; ++k) {
    if (boost::multiprecision::denominator(full.at(k)) != 1)
      throw InternalError("non-integral coefficient at t^" + std::to_string(k));
    result.set(k, full.at(k));
  }
  return result;
}

}  // namespace pdsaw
