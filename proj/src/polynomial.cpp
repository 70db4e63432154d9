#include "flatcat/polynomial.hpp"

#include <algorithm>

#include "flatcat/errors.hpp"

namespace flatcat {

BivariatePolynomial::BivariatePolynomial(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, BigInt(constant));
}

BivariatePolynomial::BivariatePolynomial(Terms terms) {
  for (const auto& [e, c] : terms) {
    if (e.x < 0 || e.y < 0) throw DomainError("BivariatePolynomial: negative exponent");
    add_term(e, c);
  }
}

BivariatePolynomial BivariatePolynomial::x(int power) { return monomial(1, power, 0); }
BivariatePolynomial BivariatePolynomial::y(int power) { return monomial(1, 0, power); }

BivariatePolynomial BivariatePolynomial::monomial(BigInt coefficient, int x_power, int y_power) {
  Terms t;
  t.emplace(Exponent{x_power, y_power}, std::move(coefficient));
  return BivariatePolynomial(std::move(t));
}

void BivariatePolynomial::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt BivariatePolynomial::coefficient(int x_power, int y_power) const {
  auto it = terms_.find(Exponent{x_power, y_power});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePolynomial::degree_x() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BivariatePolynomial::degree_y() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

BivariatePolynomial BivariatePolynomial::at_y_one() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term({e.x, 0}, c);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial out;
  return out -= *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned exponent) const {
  BivariatePolynomial result(1);
  BivariatePolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::divided_exactly(const BigInt& divisor) const {
  if (divisor == 0) throw ContractViolation("divided_exactly: division by zero");
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t()))
      throw ContractViolation("divided_exactly: inexact coefficient division");
    out.add_term(e, c / divisor);
  }
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    BigInt magnitude = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    auto append = [&](char var, int power) {
      if (power == 0) return;
      if (!factors.empty()) factors += '*';
      factors += var;
      if (power > 1) factors += "^" + std::to_string(power);
    };
    append('x', e.x);
    append('y', e.y);
    if (factors.empty())
      out += magnitude.get_str();
    else if (magnitude == 1)
      out += factors;
    else
      out += magnitude.get_str() + "*" + factors;
  }
  return out;
}

}  // namespace flatcat
