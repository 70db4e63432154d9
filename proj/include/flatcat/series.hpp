#pragma once

#include <optional>
#include <vector>

#include "flatcat/bigint.hpp"
#include "flatcat/polynomial.hpp"
#include "flatcat/stats.hpp"

namespace flatcat {

/// Largest ell accepted by the catalog; keeps every entry's degree at most 64.
inline constexpr int kMaxCatalogEll = 62;

/// numerator / denominator with the denominator's constant term equal to 1.
struct RationalBGF {
  BivariatePolynomial numerator;
  BivariatePolynomial denominator;

  /// Divides through by the denominator's constant term; throws
  /// ContractViolation when it is zero or does not divide every coefficient.
  static RationalBGF normalized(BivariatePolynomial numerator, BivariatePolynomial denominator);

  bool operator==(const RationalBGF&) const = default;
};

/// Table of [x^n y^k] for 0 <= n <= max_n, 0 <= k <= max_k.
class Triangle {
 public:
  Triangle(int max_n, int max_k, std::optional<StatKind> kind = std::nullopt);

  int max_n() const { return max_n_; }
  int max_k() const { return max_k_; }
  const std::optional<StatKind>& kind() const { return kind_; }

  /// Zero outside the stored window.
  BigInt at(int n, int k) const;
  BigInt& cell(int n, int k);

  BigInt row_sum(int n) const;
  /// Sum over k of k * at(n, k).
  BigInt row_total(int n) const;

  bool operator==(const Triangle&) const = default;

 private:
  int max_n_;
  int max_k_;
  std::optional<StatKind> kind_;
  std::vector<std::vector<BigInt>> values_;
};

/// Bivariate generating function sum x^|w| y^stat(w) over nonempty flattened
/// Catalan words. Throws UsageError for a missing or oversized ell.
RationalBGF gf(StatKind kind);

/// Coefficients by the recurrence F[n][k] = N[n][k] - sum D[i][j] F[n-i][k-j]
/// over (i, j) != (0, 0).
Triangle expand(const RationalBGF& f, int max_n, int max_k);

/// expand(gf(kind), max_n, max_k) tagged with its kind.
Triangle expand(StatKind kind, int max_n, int max_k);

/// Univariate generating function (y-degree 0) of the total number of
/// occurrences over Flat(C_n).
RationalBGF total_gf(StatKind kind);

/// Entry n (0 <= n <= max_n) is [x^n] total_gf(kind).
std::vector<BigInt> total_sequence(StatKind kind, int max_n);

/// Per-cell closed form, or nullopt for kinds without one.
std::optional<BigInt> closed_form_count(StatKind kind, int n, int k);

/// First n at which the closed-form total applies; below it the total is 0.
int closed_form_total_first_n(StatKind kind);

/// Closed-form total over Flat(C_n). Throws ContractViolation if a division
/// is inexact.
BigInt closed_form_total(StatKind kind, int n);

}  // namespace flatcat
