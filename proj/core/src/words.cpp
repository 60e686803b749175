#include "rll/words.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rll {

int checked_order(int m) {
  if (m < 3) {
    throw std::invalid_argument("constraint order m must be >= 3, got " + std::to_string(m));
  }
  return m;
}

bool is_binary(std::string_view symbols) {
  return std::all_of(symbols.begin(), symbols.end(), [](char c) { return c == '0' || c == '1'; });
}

std::size_t longest_run(std::string_view symbols) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    run = (i > 0 && symbols[i] == symbols[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

std::size_t trailing_run(std::string_view symbols) {
  if (symbols.empty()) return 0;
  std::size_t run = 1;
  for (std::size_t i = symbols.size() - 1; i > 0 && symbols[i - 1] == symbols.back(); --i) ++run;
  return run;
}

Word::Word(std::string symbols, int order) : symbols_(std::move(symbols)), order_(checked_order(order)) {
  if (!is_binary(symbols_)) {
    throw std::invalid_argument("word must consist of '0' and '1' only");
  }
}

std::size_t Word::count(char symbol) const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), symbol));
}

bool is_admissible(std::string_view symbols, int m) {
  return longest_run(symbols) < static_cast<std::size_t>(checked_order(m));
}

bool is_admissible(const Word& w) { return is_admissible(w.symbols(), w.order()); }

Truth is_admissible(const SequenceWindow& window, int m) {
  if (!is_admissible(window.prefix, m)) return Truth::no;
  return window.declared_infinite ? Truth::undetermined : Truth::yes;
}

namespace {

// Depth-first in '0' < '1' order yields lexicographic output.
void extend(std::string& buffer, std::size_t length, std::size_t run, std::size_t max_run,
            std::vector<Word>& out, int m, std::size_t capacity) {
  if (buffer.size() == length) {
    if (out.size() >= capacity) {
      throw CapacityError("enumeration exceeds capacity of " + std::to_string(capacity) +
                          " words; use count_words instead");
    }
    out.emplace_back(buffer, m);
    return;
  }
  for (char c : {'0', '1'}) {
    const bool same = !buffer.empty() && buffer.back() == c;
    const std::size_t next_run = same ? run + 1 : 1;
    if (next_run > max_run) continue;
    buffer.push_back(c);
    extend(buffer, length, next_run, max_run, out, m, capacity);
    buffer.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_words(int m, int n, std::size_t capacity) {
  checked_order(m);
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  if (count_words(m, n) > mpz_class(std::to_string(capacity))) {
    throw CapacityError("|Lambda_m^n| = " + count_words(m, n).get_str() + " exceeds capacity " +
                        std::to_string(capacity) + "; use count_words instead");
  }
  std::vector<Word> out;
  std::string buffer;
  buffer.reserve(static_cast<std::size_t>(n));
  extend(buffer, static_cast<std::size_t>(n), 0, static_cast<std::size_t>(m - 1), out, m, capacity);
  return out;
}

std::vector<Word> enumerate_words_up_to(int m, int max_length, std::size_t capacity) {
  std::vector<Word> out;
  for (int n = 0; n <= max_length; ++n) {
    auto level = enumerate_words(m, n, capacity - std::min(capacity, out.size()));
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

mpz_class count_words(int m, int n) {
  checked_order(m);
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  if (n == 0) return 1;
  // Compositions of n into run lengths 1..m-1; the first digit doubles it.
  std::vector<mpz_class> compositions(static_cast<std::size_t>(n) + 1);
  compositions[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int part = 1; part <= m - 1 && part <= i; ++part) compositions[i] += compositions[i - part];
  }
  return 2 * compositions[n];
}

namespace {

template <class Visit>
void scan_occurrences(std::string_view symbols, int m, Visit visit) {
  // w_k is free iff the run of the other digit ending at k-1 is shorter than m-1.
  const std::size_t limit = static_cast<std::size_t>(m - 1);
  std::size_t run = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const bool continues = i > 0 && symbols[i] == symbols[i - 1];
    const std::size_t other_run = (i > 0 && !continues) ? run : 0;
    if (other_run < limit) visit(i + 1, symbols[i]);
    run = continues ? run + 1 : 1;
  }
}

}  // namespace

OccurrenceReport occurrence_report(const Word& w) {
  if (!is_admissible(w)) {
    throw std::invalid_argument("occurrence_report requires an admissible word, got '" +
                                w.symbols() + "'");
  }
  OccurrenceReport report;
  scan_occurrences(w.symbols(), w.order(), [&](std::size_t pos, char c) {
    (c == '0' ? report.set0 : report.set1).push_back(pos);
  });
  report.n0 = report.set0.size();
  report.n1 = report.set1.size();
  return report;
}

OccurrenceCounts occurrence_counts(std::string_view symbols, int m) {
  OccurrenceCounts counts;
  scan_occurrences(symbols, m, [&](std::size_t, char c) { ++(c == '0' ? counts.n0 : counts.n1); });
  return counts;
}

std::string complement(std::string_view symbols) {
  std::string out(symbols);
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

Word complement(const Word& w) { return Word(complement(w.symbols()), w.order()); }

SequenceWindow complement(const SequenceWindow& w) {
  return SequenceWindow{complement(w.prefix), w.declared_infinite};
}

double Distance::value() const { return std::ldexp(1.0, -static_cast<int>(exponent)); }

Distance d2(const SequenceWindow& w, const SequenceWindow& v) {
  if (w.prefix.empty() || v.prefix.empty()) {
    throw std::invalid_argument("d2 requires non-empty windows");
  }
  const std::size_t common = std::min(w.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (w.prefix[i] != v.prefix[i]) return Distance{true, i};
  }
  return Distance{false, common};
}

Rational pi2(std::string_view symbols) {
  mpz_class numerator = 0;
  for (char c : symbols) {
    numerator *= 2;
    if (c == '1') numerator += 1;
  }
  mpz_class denominator = 1;
  denominator <<= static_cast<mp_bitcnt_t>(symbols.size());
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

LexOrder lex_compare(std::string_view w, std::string_view v) {
  const std::size_t common = std::min(w.size(), v.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (w[i] != v[i]) return w[i] < v[i] ? LexOrder::less : LexOrder::greater;
  }
  return LexOrder::equal_so_far;
}

std::string_view to_string(LexOrder order) {
  switch (order) {
    case LexOrder::less: return "less";
    case LexOrder::greater: return "greater";
    case LexOrder::equal_so_far: return "equal-so-far";
  }
  return "?";
}

}  // namespace rll
