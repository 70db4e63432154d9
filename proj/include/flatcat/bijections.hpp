#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flatcat/word.hpp"

namespace flatcat {

/// Composition with parts in {0, 1, 2}. Text form "1,0,2"; ε is "".
struct Composition {
  std::vector<int> parts;

  static Composition parse(std::string_view text);
  std::string to_string() const;
  int sum() const;
  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
};

/// Ordered set partition of {1..n}; text form "{1,2}{6}{4,5,7}{3,8}".
struct OrderConsecutivePartition {
  std::vector<std::vector<int>> blocks;

  static OrderConsecutivePartition parse(std::string_view text);
  std::string to_string() const;
  /// Blocks are nonempty, sorted, cover {1..n} disjointly and appear in order
  /// of increasing maxima, and some ordering of them has every prefix union
  /// an interval.
  bool is_valid(int n) const;
  bool operator==(const OrderConsecutivePartition&) const = default;
  auto operator<=>(const OrderConsecutivePartition&) const = default;
};

/// Word over '0', '1' and '.', the dot standing for a bullet.
struct DottedBinaryWord {
  std::string symbols;

  static DottedBinaryWord parse(std::string_view text);
  std::size_t dot_count() const;
  bool operator==(const DottedBinaryWord&) const = default;
};

/// psi(0) = ε, psi(0(w+1)) = 2 psi(w), psi(0w) = 0 psi(w),
/// psi(0(w+1)w') = 1 psi(w) 1 psi(w'). Throws DomainError unless w is flattened.
Composition psi_composition(const Word& w);

/// Inverse of psi_composition by recursive parsing. A leading 1 is matched
/// against every later 1 that closes an even-sum block, backtracking over the
/// candidates. Throws DomainError on bad parts, an odd sum, or no parse.
Word psi_composition_inverse(const Composition& c);

/// Number of complete parses found by the backtracking inverse; bijectivity
/// predicts exactly one for every even-sum composition.
std::size_t psi_composition_parse_count(const Composition& c);

/// Flattened word -> order-consecutive partition with runs(w) blocks.
OrderConsecutivePartition psi_ocp(const Word& w);

/// c(s): starts at 0 and climbs by one at every nonzero symbol of s.
Word nondecreasing_lift(std::span<const int> s);

/// Dotted binary word of length n-1 with 2k-2 dots -> flattened word of
/// length n with k weak-ascent runs. Throws DomainError on an odd dot count.
Word f_dotted(const DottedBinaryWord& u);

/// Involution on flattened words (and ε) with wdruns(phi(w)) = runs(w).
Word phi(const Word& w);

/// Every composition over {0,1,2} of the given length with even sum, in
/// lexicographic order.
std::vector<Composition> even_compositions(int length);

/// Every dotted binary word of the given length with exactly `dots` dots.
std::vector<DottedBinaryWord> dotted_words(int length, int dots);

}  // namespace flatcat
