#include "flatcat/word.hpp"

#include <algorithm>
#include <charconv>

#include "flatcat/errors.hpp"

namespace flatcat {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  if (text.empty()) return Word{};
  auto bad = [&](std::string_view why) {
    return UsageError("malformed word '" + std::string(text) + "': " + std::string(why));
  };
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw bad("expected digits or comma-separated integers");
      letters.push_back(ch - '0');
    }
    return Word(std::move(letters));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) throw bad("empty letter");
    Letter value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || value < 0)
      throw bad("letters must be nonnegative integers");
    letters.push_back(value);
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::string Word::to_compact_string() const {
  if (std::any_of(letters_.begin(), letters_.end(), [](Letter c) { return c > 9; }))
    return to_string();
  std::string out;
  for (Letter c : letters_) out += static_cast<char>('0' + c);
  return out;
}

Word Word::shifted(Letter delta) const {
  std::vector<Letter> out(letters_);
  for (Letter& c : out) c += delta;
  return Word(std::move(out));
}

Word Word::operator+(const Word& tail) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

bool validate_catalan(std::span<const Letter> letters) {
  if (letters.empty()) throw DomainError("validate_catalan: empty word");
  if (letters[0] != 0) return false;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] < 0 || letters[i] > letters[i - 1] + 1) return false;
  }
  return true;
}

bool validate_flattened(const Word& w) {
  if (!validate_catalan(w.letters())) return false;
  Letter leader = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) {
      if (w[i] < leader) return false;
      leader = w[i];
    }
  }
  return true;
}

bool is_weakly_increasing(const Word& w) {
  auto l = w.letters();
  return std::is_sorted(l.begin(), l.end());
}

FirstReturnSplit first_return_decompose(const Word& w) {
  if (w.empty() || w[0] != 0)
    throw DomainError("first_return_decompose: expected a nonempty Catalan word");
  auto l = w.letters();
  auto ret = std::find(l.begin() + 1, l.end(), 0);
  std::vector<Letter> prime(l.begin() + 1, ret);
  for (Letter& c : prime) c -= 1;
  return {Word(std::move(prime)), Word(std::vector<Letter>(ret, l.end()))};
}

Word recompose(const FirstReturnSplit& split) {
  return Word{0} + split.prime.shifted(1) + split.rest;
}

namespace detail {

bool FlattenedStep::advance(std::vector<Letter>& w, std::vector<Letter>& leaders) {
  // leaders[i] is the leading letter of the weak-ascent run holding i. The
  // smallest letter that can follow position i is leaders[i], so after bumping
  // position i the cheapest completion repeats that leader.
  for (std::size_t i = w.size(); i-- > 1;) {
    if (w[i] > w[i - 1]) continue;
    const Letter c = w[i] + 1;
    w[i] = c;
    leaders[i] = c >= w[i - 1] ? leaders[i - 1] : c;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      w[j] = leaders[i];
      leaders[j] = leaders[i];
    }
    return true;
  }
  return false;
}

bool WeaklyIncreasingStep::advance(std::vector<Letter>& w, std::vector<Letter>&) {
  for (std::size_t i = w.size(); i-- > 1;) {
    if (w[i] != w[i - 1]) continue;
    w[i] += 1;
    for (std::size_t j = i + 1; j < w.size(); ++j) w[j] = w[j - 1];
    return true;
  }
  return false;
}

}  // namespace detail

namespace {

void check_length(int n, int cap, const char* op) {
  if (n < 1) throw DomainError(std::string(op) + ": length must be at least 1");
  if (n > cap)
    throw ResourceError(std::string(op) + ": length " + std::to_string(n) +
                        " exceeds the exhaustive cap of " + std::to_string(cap));
}

}  // namespace

FlattenedWords enumerate_flattened(int n, int cap) {
  check_length(n, cap, "enumerate_flattened");
  return FlattenedWords(n);
}

WeaklyIncreasingWords enumerate_weakly_increasing(int n, int cap) {
  check_length(n, cap, "enumerate_weakly_increasing");
  return WeaklyIncreasingWords(n);
}

BigInt count_flattened(int n) {
  if (n < 1) throw DomainError("count_flattened: length must be at least 1");
  BigInt v = power(3, static_cast<unsigned long>(n - 1)) + 1;
  return v / 2;
}

}  // namespace flatcat
