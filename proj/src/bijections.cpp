#include "flatcat/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "flatcat/errors.hpp"

namespace flatcat {

namespace {

void require_flattened(const Word& w, const char* op) {
  if (w.empty() || !validate_flattened(w))
    throw DomainError(std::string(op) + ": expected a nonempty flattened Catalan word, got '" +
                      w.to_string() + "'");
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

// --- text forms -------------------------------------------------------------

Composition Composition::parse(std::string_view text) {
  return Composition{parse_int_list(text, "composition")};
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

OrderConsecutivePartition OrderConsecutivePartition::parse(std::string_view text) {
  OrderConsecutivePartition p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '{') throw UsageError("malformed partition '" + std::string(text) + "'");
    const std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos)
      throw UsageError("malformed partition '" + std::string(text) + "'");
    p.blocks.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1), "partition block"));
    pos = close + 1;
  }
  return p;
}

std::string OrderConsecutivePartition::to_string() const {
  std::string out;
  for (const auto& block : blocks) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

bool OrderConsecutivePartition::is_valid(int n) const {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int prev_max = 0, count = 0;
  for (const auto& block : blocks) {
    if (block.empty() || !std::is_sorted(block.begin(), block.end())) return false;
    for (int v : block) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
    }
    if (block.back() <= prev_max) return false;
    prev_max = block.back();
  }
  if (count != n) return false;

  // The blocks must admit an order in which every prefix union is an
  // interval. Once a start block is fixed, absorbing any block that keeps
  // the union an interval never spoils a completion, so a greedy pass per
  // start decides it.
  auto is_interval = [](const std::vector<int>& b) { return b.back() - b.front() + 1 == static_cast<int>(b.size()); };
  const std::size_t k = blocks.size();
  for (std::size_t start = 0; start < k; ++start) {
    if (!is_interval(blocks[start])) continue;
    std::vector<bool> used(k, false);
    used[start] = true;
    int lo = blocks[start].front(), hi = blocks[start].back();
    bool grew = true;
    std::size_t absorbed = 1;
    while (grew && absorbed < k) {
      grew = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (used[i]) continue;
        const int new_lo = std::min(lo, blocks[i].front());
        const int new_hi = std::max(hi, blocks[i].back());
        const int inside = (hi - lo + 1) + static_cast<int>(blocks[i].size());
        if (new_hi - new_lo + 1 != inside) continue;
        used[i] = true;
        lo = new_lo;
        hi = new_hi;
        ++absorbed;
        grew = true;
      }
    }
    if (absorbed == k) return true;
  }
  return false;
}

DottedBinaryWord DottedBinaryWord::parse(std::string_view text) {
  for (char ch : text)
    if (ch != '0' && ch != '1' && ch != '.')
      throw UsageError("malformed dotted word '" + std::string(text) + "' (use 0, 1 and .)");
  return DottedBinaryWord{std::string(text)};
}

std::size_t DottedBinaryWord::dot_count() const {
  return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), '.'));
}

// --- even compositions --------------------------------------------------------

namespace {

void append(std::vector<int>& out, const std::vector<int>& tail) {
  out.insert(out.end(), tail.begin(), tail.end());
}

std::vector<int> psi_parts(const Word& w) {
  const FirstReturnSplit s = first_return_decompose(w);
  std::vector<int> out;
  if (s.prime.empty() && s.rest.empty()) return out;
  if (s.rest.empty()) {
    out.push_back(2);
    append(out, psi_parts(s.prime));
  } else if (s.prime.empty()) {
    out.push_back(0);
    append(out, psi_parts(s.rest));
  } else {
    out.push_back(1);
    append(out, psi_parts(s.prime));
    out.push_back(1);
    append(out, psi_parts(s.rest));
  }
  return out;
}

// Every flattened word whose psi image is exactly `parts`.
std::vector<Word> psi_parses(std::span<const int> parts) {
  if (parts.empty()) return {Word{0}};
  const std::span<const int> tail = parts.subspan(1);
  std::vector<Word> out;
  switch (parts.front()) {
    case 2:
      for (const Word& w : psi_parses(tail)) out.push_back(Word{0} + w.shifted(1));
      break;
    case 0:
      for (const Word& w : psi_parses(tail)) out.push_back(Word{0} + w);
      break;
    case 1: {
      int inner_sum = 0;
      for (std::size_t j = 0; j < tail.size(); ++j) {
        if (tail[j] == 1 && inner_sum % 2 == 0) {
          for (const Word& prime : psi_parses(tail.first(j))) {
            if (!is_weakly_increasing(prime)) continue;
            for (const Word& rest : psi_parses(tail.subspan(j + 1)))
              out.push_back(Word{0} + prime.shifted(1) + rest);
          }
        }
        inner_sum += tail[j];
      }
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Word> checked_parses(const Composition& c) {
  for (int p : c.parts)
    if (p < 0 || p > 2) throw DomainError("composition parts must lie in {0,1,2}");
  if (c.sum() % 2 != 0) throw DomainError("composition '" + c.to_string() + "' has odd sum");
  return psi_parses(c.parts);
}

}  // namespace

Composition psi_composition(const Word& w) {
  require_flattened(w, "psi_composition");
  return Composition{psi_parts(w)};
}

Word psi_composition_inverse(const Composition& c) {
  std::vector<Word> parses = checked_parses(c);
  if (parses.empty())
    throw DomainError("composition '" + c.to_string() + "' has no flattened preimage");
  if (parses.size() > 1)
    throw ContractViolation("composition '" + c.to_string() + "' has several preimages");
  return std::move(parses.front());
}

std::size_t psi_composition_parse_count(const Composition& c) {
  return checked_parses(c).size();
}

std::vector<Composition> even_compositions(int length) {
  if (length < 0) throw DomainError("even_compositions: negative length");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<std::size_t>(length), 0);
  while (true) {
    if (std::accumulate(parts.begin(), parts.end(), 0) % 2 == 0) out.push_back({parts});
    std::size_t i = parts.size();
    while (i > 0 && parts[i - 1] == 2) parts[--i] = 0;
    if (i == 0) break;
    ++parts[i - 1];
  }
  return out;
}

// --- order-consecutive partitions ---------------------------------------------

namespace {

using Blocks = std::vector<std::vector<int>>;

Blocks ocp_blocks(const Word& w) {
  const int n = static_cast<int>(w.size());
  if (n == 1) return {{1}};
  const FirstReturnSplit s = first_return_decompose(w);
  if (s.rest.empty()) {
    Blocks b = ocp_blocks(s.prime);
    b.back().push_back(n);
    return b;
  }
  if (s.prime.empty()) {
    Blocks b = ocp_blocks(s.rest);
    b.push_back({n});
    return b;
  }
  // w = w' w'' with w' = 0 (prime + 1) the first weak run.
  const Word head = Word{0} + s.prime.shifted(1);
  const int m = static_cast<int>(head.size());
  Blocks b = ocp_blocks(head);
  std::vector<int> last = std::move(b.back());
  b.pop_back();
  const bool shape = std::count(last.begin(), last.end(), m - 1) == 1 &&
                     std::count(last.begin(), last.end(), m) == 1;
  if (!shape) throw ContractViolation("psi_ocp: first weak run image lacks |w'|-1 and |w'|");
  std::erase(last, m);
  for (auto block : ocp_blocks(s.rest)) {
    for (int& v : block) v += m - 1;
    b.push_back(std::move(block));
  }
  last.push_back(n);
  b.push_back(std::move(last));
  return b;
}

}  // namespace

OrderConsecutivePartition psi_ocp(const Word& w) {
  require_flattened(w, "psi_ocp");
  OrderConsecutivePartition p{ocp_blocks(w)};
  for (auto& block : p.blocks) std::sort(block.begin(), block.end());
  std::stable_sort(p.blocks.begin(), p.blocks.end(),
                   [](const auto& a, const auto& b) { return a.back() < b.back(); });
  if (!p.is_valid(static_cast<int>(w.size())))
    throw ContractViolation("psi_ocp: produced an invalid partition " + p.to_string());
  return p;
}

// --- dotted binary words ------------------------------------------------------

Word nondecreasing_lift(std::span<const int> s) {
  std::vector<Letter> c;
  c.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    c.push_back(i == 0 ? 0 : c.back() + (s[i] != 0 ? 1 : 0));
  return Word(std::move(c));
}

Word f_dotted(const DottedBinaryWord& u) {
  const std::size_t n = u.symbols.size() + 1;
  if (u.dot_count() % 2 != 0)
    throw DomainError("f_dotted: '" + u.symbols + "' has an odd number of dots");

  // v_0 = 0; the odd-numbered dots become 1, the even-numbered dots 0.
  std::vector<int> v(n, 0);
  std::vector<std::size_t> dots{0};  // i_0 = 0
  for (std::size_t p = 1; p < n; ++p) {
    const char ch = u.symbols[p - 1];
    if (ch == '.') {
      v[p] = dots.size() % 2 == 1 ? 1 : 0;
      dots.push_back(p);
    } else {
      v[p] = ch - '0';
    }
  }
  dots.push_back(n);  // i_{2k-1} = n
  const std::size_t k = dots.size() / 2;

  // Factor a spans [i_{2a}, i_{2a+2}) and is lifted on top of the heights
  // reached by the first halves [i_{2j}, i_{2j+1}) of the earlier factors.
  std::vector<Letter> out;
  out.reserve(n);
  Letter offset = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t begin = dots[2 * a];
    const std::size_t end = a + 1 < k ? dots[2 * a + 2] : n;
    const std::span<const int> factor(v.data() + begin, end - begin);
    const Word lifted = nondecreasing_lift(factor);
    for (Letter c : lifted.letters()) out.push_back(offset + c);
    offset += static_cast<Letter>(
        std::count(v.begin() + static_cast<std::ptrdiff_t>(begin),
                   v.begin() + static_cast<std::ptrdiff_t>(dots[2 * a + 1]), 1));
  }
  return Word(std::move(out));
}

std::vector<DottedBinaryWord> dotted_words(int length, int dots) {
  std::vector<DottedBinaryWord> out;
  if (length < 0 || dots < 0 || dots > length) return out;
  std::string s(static_cast<std::size_t>(length), '0');
  // Digits over the alphabet '.' < '0' < '1' in lexicographic order.
  const std::string alphabet = ".01";
  std::vector<int> idx(static_cast<std::size_t>(length), 0);
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) s[i] = alphabet[static_cast<std::size_t>(idx[i])];
    if (std::count(s.begin(), s.end(), '.') == dots) out.push_back({s});
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] == 2) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return out;
}

// --- involution ---------------------------------------------------------------

namespace {

Word phi_unchecked(const Word& w) {
  if (w.empty()) return w;
  const FirstReturnSplit s = first_return_decompose(w);
  if (s.prime.empty() && s.rest.empty()) return Word{0};
  if (s.rest.empty()) return Word{0} + phi_unchecked(s.prime);
  if (s.prime.empty()) return Word{0} + phi_unchecked(s.rest).shifted(1);
  return Word{0} + phi_unchecked(s.prime).shifted(1) + phi_unchecked(s.rest);
}

}  // namespace

Word phi(const Word& w) {
  if (!w.empty()) require_flattened(w, "phi");
  return phi_unchecked(w);
}

}  // namespace flatcat
