#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rll/rational.hpp"

namespace rll {

/// Raised when enumerate_words would materialize more words than allowed.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Validates a constraint order; throws std::invalid_argument when m < 3.
int checked_order(int m);

/// True iff every character is '0' or '1'.
bool is_binary(std::string_view symbols);

/// Length of the longest maximal run of equal symbols (0 for the empty string).
std::size_t longest_run(std::string_view symbols);

/// Length of the run of equal symbols ending at the last position.
std::size_t trailing_run(std::string_view symbols);

/// A finite binary word tagged with the constraint order m of the shift it
/// is read in. Any binary string is representable; admissibility is a query.
class Word {
 public:
  Word(std::string symbols, int order);

  const std::string& symbols() const noexcept { return symbols_; }
  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  int digit(std::size_t i) const { return symbols_[i] - '0'; }

  /// Number of zeros (|w|_0) or ones (|w|_1).
  std::size_t count(char symbol) const;

  bool operator==(const Word&) const = default;

 private:
  std::string symbols_;
  int order_;
};

/// Finite prefix of a binary sequence. When declared_infinite is set the
/// window stands for an unspecified infinite continuation.
struct SequenceWindow {
  std::string prefix;
  bool declared_infinite = true;

  std::size_t size() const noexcept { return prefix.size(); }
};

enum class Truth { no, yes, undetermined };

/// Admissible iff no run of length >= m (i.e. neither 0^m nor 1^m occurs).
bool is_admissible(const Word& w);
bool is_admissible(std::string_view symbols, int m);

/// Three-valued admissibility for a window: a visible forbidden block decides
/// `no`; otherwise a declared-infinite window is `undetermined`.
Truth is_admissible(const SequenceWindow& window, int m);

/// Admissible words of length n in lexicographic order ('0' < '1').
inline constexpr std::size_t kDefaultEnumerationCapacity = std::size_t{1} << 24;
std::vector<Word> enumerate_words(int m, int n,
                                  std::size_t capacity = kDefaultEnumerationCapacity);

/// All admissible words of length 0..max_length, shortest first, each length
/// in lexicographic order. Includes the empty word.
std::vector<Word> enumerate_words_up_to(int m, int max_length,
                                        std::size_t capacity = kDefaultEnumerationCapacity);

/// |Lambda_m^n| via the run-length recurrence; exact for any n.
mpz_class count_words(int m, int n);

/// Positions (1-based) of free zeros and free ones: w_k = 0 is free when
/// replacing it by 1 keeps the prefix w_1..w_k admissible, symmetrically for ones.
struct OccurrenceReport {
  std::vector<std::size_t> set0;
  std::vector<std::size_t> set1;
  std::size_t n0 = 0;
  std::size_t n1 = 0;
};

/// Throws std::invalid_argument for inadmissible w.
OccurrenceReport occurrence_report(const Word& w);

/// Counts only, without materializing position sets.
struct OccurrenceCounts {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
};
OccurrenceCounts occurrence_counts(std::string_view symbols, int m);

Word complement(const Word& w);
SequenceWindow complement(const SequenceWindow& w);
std::string complement(std::string_view symbols);

/// d_2 on finite data: exact 2^-exponent when the windows differ inside their
/// common length, otherwise only the bound d_2 <= 2^-exponent.
struct Distance {
  bool exact = false;
  std::size_t exponent = 0;

  double value() const;
};

/// Throws std::invalid_argument if either window is empty.
Distance d2(const SequenceWindow& w, const SequenceWindow& v);

/// Sum of w_n 2^-n; the cylinder [w] projects into [pi2, pi2 + 2^-|w|].
Rational pi2(std::string_view symbols);
inline Rational pi2(const Word& w) { return pi2(w.symbols()); }

enum class LexOrder { less, greater, equal_so_far };

LexOrder lex_compare(std::string_view w, std::string_view v);
inline LexOrder lex_compare(const SequenceWindow& w, const SequenceWindow& v) {
  return lex_compare(w.prefix, v.prefix);
}

std::string_view to_string(LexOrder order);

}  // namespace rll
