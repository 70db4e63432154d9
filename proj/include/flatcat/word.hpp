#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatcat/bigint.hpp"

namespace flatcat {

using Letter = int;

/// Largest length accepted by operations that visit every word of a length.
inline constexpr int kDefaultExhaustiveCap = 20;

namespace detail {
struct WordCursor;
}

/// A finite sequence of nonnegative integer letters.
///
/// Construction does not validate; Catalan and flattened validity are
/// properties checked by validate_catalan and validate_flattened. The empty
/// word is representable so that first-return decompositions can hold it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Accepts "0,1,2,2" or, when every letter is a single digit, "0122".
  /// Throws UsageError on malformed text. The empty string parses to ε.
  static Word parse(std::string_view text);

  /// Canonical comma-separated form; ε prints as the empty string.
  std::string to_string() const;
  /// Digit-string form when every letter is at most 9, otherwise canonical.
  std::string to_compact_string() const;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Adds delta to every letter.
  Word shifted(Letter delta) const;
  /// Concatenation.
  Word operator+(const Word& tail) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  friend struct detail::WordCursor;
  std::vector<Letter> letters_;
};

/// Clamped range of letter positions, 0-based and inclusive on both ends.
struct LetterRange {
  std::size_t first = 0;
  std::size_t last = 0;
  bool operator==(const LetterRange&) const = default;
};

/// True iff letters[0] == 0 and each letter rises by at most one.
/// Throws DomainError on an empty sequence.
bool validate_catalan(std::span<const Letter> letters);

/// True iff the word is Catalan and the leading letters of its maximal
/// weak-ascent runs are weakly increasing. Throws DomainError on ε.
bool validate_flattened(const Word& w);

bool is_weakly_increasing(const Word& w);

/// w = 0 (prime + 1) rest, where rest starts at the first return to 0.
struct FirstReturnSplit {
  Word prime;
  Word rest;
  bool operator==(const FirstReturnSplit&) const = default;
};

FirstReturnSplit first_return_decompose(const Word& w);
Word recompose(const FirstReturnSplit& split);

namespace detail {

struct WordCursor {
  static std::vector<Letter>& letters(Word& w) { return w.letters_; }
};

// Lexicographic successor over flattened Catalan words of fixed length.
struct FlattenedStep {
  static bool advance(std::vector<Letter>& w, std::vector<Letter>& leaders);
};

// Lexicographic successor over weakly increasing Catalan words.
struct WeaklyIncreasingStep {
  static bool advance(std::vector<Letter>& w, std::vector<Letter>& leaders);
};

}  // namespace detail

/// Single-pass stream of words of one length in increasing lexicographic
/// order. Holds only the current word.
template <class Step>
class WordStream {
 public:
  class iterator {
   public:
    using value_type = Word;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n) : done_(false) {
      auto& letters = detail::WordCursor::letters(current_);
      letters.assign(static_cast<std::size_t>(n), 0);
      leaders_.assign(static_cast<std::size_t>(n), 0);
    }

    const Word& operator*() const { return current_; }
    const Word* operator->() const { return &current_; }
    iterator& operator++() {
      done_ = !Step::advance(detail::WordCursor::letters(current_), leaders_);
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    Word current_;
    std::vector<Letter> leaders_;
    bool done_ = true;
  };

  explicit WordStream(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  int length() const { return n_; }

 private:
  int n_;
};

using FlattenedWords = WordStream<detail::FlattenedStep>;
using WeaklyIncreasingWords = WordStream<detail::WeaklyIncreasingStep>;

/// All of Flat(C_n), lexicographically. Throws DomainError for n < 1 and
/// ResourceError for n > cap.
FlattenedWords enumerate_flattened(int n, int cap = kDefaultExhaustiveCap);

/// The 2^(n-1) weakly increasing Catalan words of length n.
WeaklyIncreasingWords enumerate_weakly_increasing(int n,
                                                  int cap = kDefaultExhaustiveCap);

/// (3^(n-1) + 1) / 2. Throws DomainError for n < 1.
BigInt count_flattened(int n);

}  // namespace flatcat
