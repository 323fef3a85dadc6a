#pragma once

#include <map>
#include <string>

#include "pdsaw/bigint.hpp"
#include "pdsaw/errors.hpp"

namespace pdsaw {

// Sparse Laurent polynomial in q with exact integer coefficients. Ordinary
// polynomials are the sub-case with no negative exponents; is_polynomial()
// distinguishes them. Zero coefficients are never stored.
class QPoly {
 public:
  using Exp = long long;

  QPoly() = default;
  explicit QPoly(const BigInt& constant);
  explicit QPoly(long long constant);
  static QPoly term(const BigInt& coeff, Exp exp);

  bool is_zero() const { return c_.empty(); }
  bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }
  Exp min_exp() const;  // throws DomainError on the zero polynomial
  Exp max_exp() const;
  BigInt coeff(Exp exp) const;
  const std::map<Exp, BigInt>& coeffs() const { return c_; }

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly&) const = default;

  QPoly shifted(Exp k) const;  // multiply by q^k
  QPoly pow(unsigned exponent) const;
  BigInt eval_one() const;  // value at q = 1, i.e. the coefficient sum

  // Human-readable ascending form, e.g. "2 + q + 3q^2".
  std::string str() const;

  void set(Exp exp, const BigInt& value);  // removes the term when value == 0

 private:
  std::map<Exp, BigInt> c_;
};

// Exact quotient a / b; throws InexactDivisionError when b does not divide a
// in the (Laurent) polynomial ring over the integers.
QPoly div_exact(const QPoly& a, const QPoly& b);

// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
QPoly q_integer(long long k);

}  // namespace pdsaw
