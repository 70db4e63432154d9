#pragma once

#include <compare>
#include <map>
#include <string>

#include "flatcat/bigint.hpp"

namespace flatcat {

struct Exponent {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored.
class BivariatePolynomial {
 public:
  using Terms = std::map<Exponent, BigInt>;

  BivariatePolynomial() = default;
  BivariatePolynomial(long constant);  // NOLINT: integers promote implicitly
  explicit BivariatePolynomial(Terms terms);

  static BivariatePolynomial x(int power = 1);
  static BivariatePolynomial y(int power = 1);
  static BivariatePolynomial monomial(BigInt coefficient, int x_power, int y_power);

  const Terms& terms() const { return terms_; }
  BigInt coefficient(int x_power, int y_power) const;
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;

  /// Value at y = 1, as a polynomial in x alone.
  BivariatePolynomial at_y_one() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
  BivariatePolynomial operator-() const;

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);

  BivariatePolynomial pow(unsigned exponent) const;
  /// Exact division of every coefficient; throws ContractViolation otherwise.
  BivariatePolynomial divided_exactly(const BigInt& divisor) const;

  bool operator==(const BivariatePolynomial&) const = default;

  /// E.g. "1 - 4*x + 4*x^2 - x^2*y", terms ordered by (x, y) exponent.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigInt& c);
  Terms terms_;
};

}  // namespace flatcat
