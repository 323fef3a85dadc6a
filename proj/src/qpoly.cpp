#include "pdsaw/qpoly.hpp"

namespace pdsaw {

QPoly::QPoly(const BigInt& constant) {
  if (constant != 0) c_[0] = constant;
}

QPoly::QPoly(long long constant) : QPoly(BigInt(constant)) {}

QPoly QPoly::term(const BigInt& coeff, Exp exp) {
  QPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

QPoly::Exp QPoly::min_exp() const {
  if (c_.empty()) throw DomainError("zero polynomial has no degree");
  return c_.begin()->first;
}

QPoly::Exp QPoly::max_exp() const {
  if (c_.empty()) throw DomainError("zero polynomial has no degree");
  return c_.rbegin()->first;
}

BigInt QPoly::coeff(Exp exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

void QPoly::set(Exp exp, const BigInt& value) {
  if (value == 0) c_.erase(exp);
  else c_[exp] = value;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  for (const auto& [exp, coeff] : other.c_) {
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  for (const auto& [exp, coeff] : other.c_) {
    auto it = c_.find(exp);
    if (it == c_.end()) {
      c_[exp] = -coeff;
    } else {
      it->second -= coeff;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly result;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      auto& cell = result.c_[ea + eb];
      cell += ca * cb;
    }
  for (auto it = result.c_.begin(); it != result.c_.end();)
    it = it->second == 0 ? result.c_.erase(it) : std::next(it);
  return result;
}

QPoly QPoly::shifted(Exp k) const {
  QPoly result;
  for (const auto& [exp, coeff] : c_) result.c_[exp + k] = coeff;
  return result;
}

QPoly QPoly::pow(unsigned exponent) const {
  QPoly result(BigInt(1));
  QPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

BigInt QPoly::eval_one() const {
  BigInt sum = 0;
  for (const auto& [exp, coeff] : c_) sum += coeff;
  return sum;
}

std::string QPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [exp, coeff] : c_) {
    BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    bool unit = mag == 1;
    if (exp == 0 || !unit) out += mag.str();
    if (exp != 0) {
      out += "q";
      if (exp != 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

QPoly div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InexactDivisionError("division by the zero polynomial");
  if (a.is_zero()) return QPoly();
  // Normalise Laurent inputs to ordinary polynomials, divide, shift back.
  QPoly::Exp shift = a.min_exp() - b.min_exp();
  QPoly rem = a.shifted(-a.min_exp());
  QPoly div = b.shifted(-b.min_exp());
  QPoly quot;
  const BigInt lead = div.coeff(div.max_exp());
  while (!rem.is_zero() && rem.max_exp() >= div.max_exp()) {
    BigInt c = rem.coeff(rem.max_exp());
    if (c % lead != 0) throw InexactDivisionError("inexact division");
    BigInt factor = c / lead;
    QPoly::Exp exp = rem.max_exp() - div.max_exp();
    QPoly piece = QPoly::term(factor, exp);
    quot += piece;
    rem -= piece * div;
  }
  if (!rem.is_zero()) throw InexactDivisionError("inexact division");
  return quot.shifted(shift);
}

QPoly q_integer(long long k) {
  QPoly result;
  for (long long e = 0; e < k; ++e) result.set(e, 1);
  return result;
}

}  // namespace pdsaw
