#pragma once

#include <vector>

#include "pdsaw/bigint.hpp"
#include "pdsaw/errors.hpp"

namespace pdsaw {

// Power series in t truncated at a fixed order, with exact rational
// coefficients. All arithmetic is closed at the truncation order.
class RationalSeries {
 public:
  explicit RationalSeries(int order);  // the zero series
  static RationalSeries constant(const BigRat& value, int order);
  static RationalSeries monomial(const BigRat& value, int degree, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& at(int k) const;
  void set(int k, const BigRat& value);

  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries& operator-=(const RationalSeries& other);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  RationalSeries scaled(const BigRat& factor) const;
  bool operator==(const RationalSeries&) const = default;

  // Multiplicative inverse; requires a nonzero constant term.
  RationalSeries inverse() const;

  // Square root with constant term 1, solved coefficient by coefficient from
  // the convolution identity; requires at(0) == 1.
  RationalSeries sqrt() const;

  // Divide by t^k; throws DomainError when any of the k lowest coefficients
  // is nonzero. The order shrinks by k.
  RationalSeries shift_down(int k) const;

  bool integral() const;
  // All coefficients as exact integers; throws DomainError when any
  // coefficient has a denominator.
  std::vector<BigInt> integer_coefficients() const;

 private:
  std::vector<BigRat> c_;  // c_[k] is the coefficient of t^k
};

// Generating function of walks in the symmetric wedge by total step count,
// ending anywhere: with P = sqrt((1-t^2)(1-5t^2)) and Q = (1-3t^2-P)/2t,
//   ( (1+t)t - (1-t^2-P) * sum_{n>=0} (-1)^n t^(n^2) Q^n ) / ( t(1-2t-t^2) ),
// truncated at `order`. Every coefficient must come out integral.
RationalSeries free_walk_series(int order);

}  // namespace pdsaw
