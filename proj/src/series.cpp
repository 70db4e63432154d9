#include "flatcat/series.hpp"

#include <algorithm>
#include <climits>

#include "flatcat/errors.hpp"

namespace flatcat {

using Poly = BivariatePolynomial;

RationalBGF RationalBGF::normalized(Poly numerator, Poly denominator) {
  const BigInt c = denominator.coefficient(0, 0);
  if (c == 0) throw ContractViolation("RationalBGF: denominator has zero constant term");
  if (c != 1) {
    numerator = numerator.divided_exactly(c);
    denominator = denominator.divided_exactly(c);
  }
  return {std::move(numerator), std::move(denominator)};
}

Triangle::Triangle(int max_n, int max_k, std::optional<StatKind> kind)
    : max_n_(max_n), max_k_(max_k), kind_(kind) {
  if (max_n < 0 || max_k < 0) throw DomainError("Triangle: negative bounds");
  values_.assign(static_cast<std::size_t>(max_n) + 1,
                 std::vector<BigInt>(static_cast<std::size_t>(max_k) + 1, BigInt(0)));
}

BigInt Triangle::at(int n, int k) const {
  if (n < 0 || k < 0 || n > max_n_ || k > max_k_) return 0;
  return values_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt& Triangle::cell(int n, int k) {
  if (n < 0 || k < 0 || n > max_n_ || k > max_k_)
    throw ContractViolation("Triangle::cell: index outside the table");
  return values_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt Triangle::row_sum(int n) const {
  BigInt sum = 0;
  for (int k = 0; k <= max_k_; ++k) sum += at(n, k);
  return sum;
}

BigInt Triangle::row_total(int n) const {
  BigInt sum = 0;
  for (int k = 1; k <= max_k_; ++k) sum += at(n, k) * k;
  return sum;
}

namespace {

const Poly X = Poly::x();
const Poly Y = Poly::y();

int checked_ell(StatKind kind) {
  kind.require_valid();
  if (kind.ell > kMaxCatalogEll)
    throw UsageError("ell = " + std::to_string(kind.ell) + " exceeds the catalog limit of " +
                     std::to_string(kMaxCatalogEll));
  return kind.ell;
}

// y * F(x*y, 1/y), cleared of negative powers of y by scaling numerator and
// denominator by the same power of y.
RationalBGF descent_substitution(const RationalBGF& f) {
  auto substitute = [](const Poly& p, int y_shift) {
    std::map<std::pair<int, int>, BigInt> out;
    for (const auto& [e, c] : p.terms()) out[{e.x, e.x - e.y + y_shift}] += c;
    return out;
  };
  auto num = substitute(f.numerator, 1);
  auto den = substitute(f.denominator, 0);
  int low = 0;
  for (const auto* m : {&num, &den})
    for (const auto& [e, c] : *m) low = std::min(low, e.second);
  auto clear = [low](const std::map<std::pair<int, int>, BigInt>& m) {
    Poly::Terms t;
    for (const auto& [e, c] : m)
      if (c != 0) t[Exponent{e.first, e.second - low}] += c;
    return Poly(std::move(t));
  };
  return RationalBGF::normalized(clear(num), clear(den));
}

}  // namespace

RationalBGF gf(StatKind kind) {
  kind.require_valid();
  switch (kind.stat) {
    case Stat::runs:
    case Stat::wdruns:
      return RationalBGF::normalized(X * Y * (1 - X - X * Y),
                                     1 - 2 * X + X.pow(2) - 2 * X * Y + X.pow(2) * Y +
                                         X.pow(2) * Y.pow(2));
    case Stat::wruns:
      return RationalBGF::normalized((1 - 2 * X) * X * Y, 1 - 4 * X + 4 * X.pow(2) - X.pow(2) * Y);
    case Stat::druns:
      return descent_substitution(gf(StatKind::wruns()));
    case Stat::ell_val: {
      const Poly high = Poly::x(checked_ell(kind) + 1);
      return RationalBGF::normalized(X * (1 - 2 * X + high - high * Y),
                                     (1 - X) * (1 - 3 * X + high - high * Y));
    }
    case Stat::val:
      return RationalBGF::normalized(X - 3 * X.pow(2) + X.pow(3) * (3 - Y),
                                     (1 - X) * (1 - 4 * X + 4 * X.pow(2) - X.pow(2) * Y));
    case Stat::symv:
      return RationalBGF::normalized(
          X * (1 - 2 * X) * (1 - 2 * X + 2 * X.pow(2) - X.pow(2) * Y),
          (1 - X) * (1 - 5 * X + 8 * X.pow(2) - 5 * X.pow(3) - X.pow(2) * Y + 2 * X.pow(3) * Y));
    case Stat::ell_peak: {
      const Poly high = Poly::x(checked_ell(kind) + 1);
      return RationalBGF::normalized(X * (1 - 2 * X), (1 - X) * (1 - 3 * X + high * (1 - Y)));
    }
    case Stat::peak:
      return RationalBGF::normalized(X * (1 - 2 * X), 1 - 4 * X + 4 * X.pow(2) - X.pow(2) * Y);
    case Stat::symp:
      return RationalBGF::normalized(
          X * (1 - X) * (1 - 2 * X),
          1 - 5 * X + 8 * X.pow(2) - 5 * X.pow(3) - X.pow(2) * Y + 2 * X.pow(3) * Y);
  }
  throw UsageError("gf: unknown statistic");
}

Triangle expand(const RationalBGF& f, int max_n, int max_k) {
  if (f.denominator.coefficient(0, 0) != 1)
    throw ContractViolation("expand: denominator constant term must be 1");
  Triangle t(max_n, max_k);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= max_k; ++k) {
      BigInt v = f.numerator.coefficient(n, k);
      for (const auto& [e, d] : f.denominator.terms()) {
        if (e.x == 0 && e.y == 0) continue;
        if (e.x > n || e.y > k) continue;
        v -= d * t.at(n - e.x, k - e.y);
      }
      t.cell(n, k) = std::move(v);
    }
  }
  return t;
}

Triangle expand(StatKind kind, int max_n, int max_k) {
  const Triangle raw = expand(gf(kind), max_n, max_k);
  Triangle tagged(max_n, max_k, kind);
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= max_k; ++k) tagged.cell(n, k) = raw.at(n, k);
  return tagged;
}

RationalBGF total_gf(StatKind kind) {
  kind.require_valid();
  const Poly one_minus_x = 1 - X;
  const Poly one_minus_3x = 1 - 3 * X;
  const Poly q = 1 - 4 * X + 3 * X.pow(2);
  switch (kind.stat) {
    case Stat::runs:
    case Stat::wdruns:
      return RationalBGF::normalized(X - 5 * X.pow(2) + 8 * X.pow(3) - 3 * X.pow(4),
                                     one_minus_3x.pow(2) * one_minus_x.pow(2));
    case Stat::wruns:
      return RationalBGF::normalized(X * (1 - 2 * X).pow(3), q.pow(2));
    case Stat::druns:
      return RationalBGF::normalized(X * (1 - 4 * X + 4 * X.pow(2) + 2 * X.pow(3)), q.pow(2));
    case Stat::ell_val:
      return RationalBGF::normalized(Poly::x(checked_ell(kind) + 3),
                                     one_minus_x * one_minus_3x.pow(2));
    case Stat::val:
      return RationalBGF::normalized(X.pow(4), one_minus_x.pow(2) * one_minus_3x.pow(2));
    case Stat::symv:
      return RationalBGF::normalized(X.pow(4) * (1 - 2 * X),
                                     one_minus_3x.pow(2) * one_minus_x.pow(3));
    case Stat::ell_peak:
      return RationalBGF::normalized(Poly::x(checked_ell(kind) + 2) * (1 - 2 * X),
                                     one_minus_3x.pow(2) * one_minus_x);
    case Stat::peak:
      return RationalBGF::normalized((1 - 2 * X) * X.pow(3), q.pow(2));
    case Stat::symp:
      return RationalBGF::normalized((1 - 2 * X).pow(2) * X.pow(3),
                                     one_minus_3x.pow(2) * one_minus_x.pow(3));
  }
  throw UsageError("total_gf: unknown statistic");
}

std::vector<BigInt> total_sequence(StatKind kind, int max_n) {
  const Triangle t = expand(total_gf(kind), max_n, 0);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) out.push_back(t.at(n, 0));
  return out;
}

namespace {

// 2^e * b where b is known to vanish whenever e < 0.
BigInt scaled_by_power_of_two(long e, const BigInt& b) {
  if (b == 0) return 0;
  if (e < 0) throw ContractViolation("closed form: negative power of two on a nonzero binomial");
  return power(2, static_cast<unsigned long>(e)) * b;
}

BigInt exact_quotient(const BigInt& numerator, long divisor) {
  const BigInt d = divisor;
  if (!mpz_divisible_p(numerator.get_mpz_t(), d.get_mpz_t()))
    throw ContractViolation("closed_form_total: inexact division");
  return numerator / d;
}

}  // namespace

std::optional<BigInt> closed_form_count(StatKind kind, int n, int k) {
  kind.require_valid();
  if (n < 1) throw DomainError("closed_form_count: n must be at least 1");
  const long m = n;
  switch (kind.stat) {
    case Stat::runs:
    case Stat::wdruns: {
      BigInt sum = 0;
      for (long j = 0; j <= k - 1; ++j)
        sum += binomial(m - 1, 2L * k - j - 2) * binomial(2L * k - j - 2, j);
      return sum;
    }
    case Stat::wruns:
      if (k < 1) return BigInt(0);
      return scaled_by_power_of_two(m - 2L * k + 1, binomial(m - 1, 2L * k - 2));
    case Stat::druns:
      if (k < 1) return BigInt(0);
      return scaled_by_power_of_two(2L * k - m - 1, binomial(m - 1, 2 * (m - k)));
    case Stat::val:
      if (k < 0) return BigInt(0);
      if (k == 0) return n == 1 ? BigInt(1) : BigInt(power(2, m - 2) * (m - 1) + 1);
      return scaled_by_power_of_two(m - 2L * k - 2, binomial(m - 1, 2L * k + 1));
    case Stat::ell_peak:
      if (kind.ell == 1 && k == 0) return BigInt(fibonacci(2 * static_cast<unsigned long>(m - 1)) + 1);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

int closed_form_total_first_n(StatKind kind) {
  kind.require_valid();
  switch (kind.stat) {
    case Stat::runs:
    case Stat::wruns:
    case Stat::druns:
    case Stat::wdruns: return 1;
    case Stat::ell_val:
    case Stat::ell_peak: return kind.ell + 2;
    case Stat::val:
    case Stat::symv: return 4;
    case Stat::peak:
    case Stat::symp: return 3;
  }
  throw UsageError("closed_form_total_first_n: unknown statistic");
}

BigInt closed_form_total(StatKind kind, int n) {
  if (n < closed_form_total_first_n(kind)) return 0;
  const long m = n;
  const BigInt p3n = power(3, static_cast<unsigned long>(n));
  switch (kind.stat) {
    case Stat::runs:
    case Stat::wdruns:
      return exact_quotient((power(3, m - 1) + 1) * (m + 1), 4);
    case Stat::wruns:
      return exact_quotient(27 - 9 * m + (5 + m) * p3n, 36);
    case Stat::druns:
      return exact_quotient(27 * m - 9 + (5 * m + 1) * p3n, 36);
    case Stat::ell_val:
      return exact_quotient(1 + power(3, static_cast<unsigned long>(m - kind.ell - 2)) *
                                    (2 * m - 2L * kind.ell - 5),
                            4);
    case Stat::val:
      return exact_quotient(p3n * (m - 4) + 9 * m, 36);
    case Stat::symv:
      return exact_quotient(p3n * (2 * m - 5) - 18 * m * m + 54 * m - 27, 144);
    case Stat::ell_peak:
      return exact_quotient(power(3, static_cast<unsigned long>(m - kind.ell - 2)) *
                                    (2 * m + 1 - 2L * kind.ell) -
                                1,
                            4);
    case Stat::peak:
      return exact_quotient((power(3, static_cast<unsigned long>(m - 2)) - 1) * (m - 1), 4);
    case Stat::symp:
      return exact_quotient(63 + p3n + 2 * (p3n - 45) * m + 18 * m * m, 144);
  }
  throw UsageError("closed_form_total: unknown statistic");
}

}  // namespace flatcat
