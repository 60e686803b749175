#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rll/words.hpp"

using namespace rll;

TEST_CASE("admissibility examples") {
  CHECK(is_admissible(Word("010", 3)));
  CHECK_FALSE(is_admissible(Word("0001", 3)));
  CHECK(is_admissible(Word("000", 4)));
  CHECK(is_admissible(Word("", 3)));
  CHECK_THROWS_AS(Word("01", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word("0a1", 3), std::invalid_argument);
}

TEST_CASE("admissibility matches the forbidden-block scan") {
  for (int m : {3, 4, 5}) {
    for (std::size_t n = 0; n <= 10; ++n) {
      for (const auto& s : oracle::all_strings(n)) {
        REQUIRE(is_admissible(s, m) == oracle::admissible(s, m));
      }
    }
  }
}

TEST_CASE("window admissibility is three-valued") {
  CHECK(is_admissible(SequenceWindow{"0110", true}, 3) == Truth::undetermined);
  CHECK(is_admissible(SequenceWindow{"0110", false}, 3) == Truth::yes);
  CHECK(is_admissible(SequenceWindow{"01110", true}, 3) == Truth::no);
}

TEST_CASE("enumerate_words examples") {
  auto symbols = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.symbols());
    return out;
  };
  CHECK(symbols(enumerate_words(3, 1)) == std::vector<std::string>{"0", "1"});
  CHECK(enumerate_words(3, 3).size() == 6);
  CHECK(enumerate_words(3, 4).size() == 10);
}

TEST_CASE("enumeration equals filtered brute force, in lexicographic order") {
  for (int m : {3, 4, 5}) {
    for (int n = 1; n <= 12; ++n) {
      std::vector<std::string> got;
      for (const auto& w : enumerate_words(m, n)) got.push_back(w.symbols());
      REQUIRE(got == oracle::admissible_words(m, static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("enumerate_words refuses lists beyond capacity") {
  CHECK_THROWS_AS(enumerate_words(3, 40), CapacityError);
  CHECK_THROWS_AS(enumerate_words(3, 10, 5), CapacityError);
  CHECK_NOTHROW(enumerate_words(3, 10, 200));
}

TEST_CASE("count_words examples") {
  CHECK(count_words(3, 2) == 4);
  CHECK(count_words(3, 5) == 16);
  CHECK(count_words(4, 3) == 8);
  // Fibonacci growth for m = 3 continues far past 64 bits.
  CHECK(count_words(3, 200) == count_words(3, 199) + count_words(3, 198));
}

TEST_CASE("count_words agrees with enumeration") {
  for (int m : {3, 4, 5}) {
    for (int n = 1; n <= 16; ++n) {
      REQUIRE(count_words(m, n) == static_cast<unsigned long>(enumerate_words(m, n).size()));
    }
  }
}

TEST_CASE("occurrence_report examples") {
  auto r = occurrence_report(Word("010", 3));
  CHECK(r.n0 == 2);
  CHECK(r.n1 == 1);
  r = occurrence_report(Word("001", 3));
  CHECK(r.n0 == 2);
  CHECK(r.n1 == 0);
  CHECK(r.set0 == std::vector<std::size_t>{1, 2});
  r = occurrence_report(Word("0101", 5));
  CHECK(r.n0 == 2);
  CHECK(r.n1 == 2);
  r = occurrence_report(Word("", 3));
  CHECK(r.n0 == 0);
  CHECK(r.n1 == 0);
  CHECK_THROWS_AS(occurrence_report(Word("0001", 3)), std::invalid_argument);
}

TEST_CASE("local occurrence rule equals the prefix definition") {
  for (int m : {3, 4, 5}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      for (const auto& s : oracle::admissible_words(m, n)) {
        const auto r = occurrence_report(Word(s, m));
        REQUIRE(r.set0 == oracle::free_positions(s, m, '0'));
        REQUIRE(r.set1 == oracle::free_positions(s, m, '1'));
        REQUIRE(r.n0 == r.set0.size());
        REQUIRE(r.n1 == r.set1.size());
        const auto counts = occurrence_counts(s, m);
        REQUIRE(counts.n0 == r.n0);
        REQUIRE(counts.n1 == r.n1);
      }
    }
  }
}

TEST_CASE("occurrence report invariants and complement symmetry") {
  for (int m : {3, 4}) {
    for (const auto& w : enumerate_words_up_to(m, 12)) {
      const auto r = occurrence_report(w);
      REQUIRE(r.n0 + r.n1 <= w.size());
      REQUIRE(r.n0 <= w.count('0'));
      REQUIRE(r.n1 <= w.count('1'));
      for (auto k : r.set0) REQUIRE(w.symbols()[k - 1] == '0');
      for (auto k : r.set1) REQUIRE(w.symbols()[k - 1] == '1');
      const auto rc = occurrence_report(complement(w));
      REQUIRE(rc.set0 == r.set1);
      REQUIRE(rc.set1 == r.set0);
    }
  }
}

TEST_CASE("complement") {
  CHECK(complement(Word("010", 3)).symbols() == "101");
  const Word w("0011", 3);
  CHECK(complement(complement(w)) == w);
  CHECK(is_admissible(complement(w)));
  CHECK(complement(SequenceWindow{"10", true}).prefix == "01");
}

TEST_CASE("d2 on windows") {
  auto d = d2({"0", true}, {"1", true});
  CHECK(d.exact);
  CHECK(d.value() == 1.0);
  d = d2({"0101", true}, {"0111", true});
  CHECK(d.exact);
  CHECK(d.exponent == 2);
  CHECK(d.value() == 0.25);
  d = d2({"0101", true}, {"0101", true});
  CHECK_FALSE(d.exact);
  CHECK(d.exponent == 4);
  d = d2({"01", true}, {"0101", true});
  CHECK_FALSE(d.exact);
  CHECK(d.exponent == 2);
  CHECK_THROWS_AS(d2({"", true}, {"0", true}), std::invalid_argument);
}

TEST_CASE("pi2") {
  CHECK(pi2("1") == Rational(1, 2));
  CHECK(pi2("011") == Rational(3, 8));
  CHECK(pi2("000") == 0);
  CHECK(pi2("") == 0);
}

TEST_CASE("projection is 1-Lipschitz against d2 wherever d2 is exact") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto all = oracle::all_strings(n);
    for (const auto& w : all) {
      for (const auto& v : all) {
        const Distance d = d2({w, true}, {v, true});
        if (!d.exact) continue;
        Rational gap = pi2(w) - pi2(v);
        if (gap < 0) gap = -gap;
        Rational bound(1);
        bound /= mpz_class(1) << static_cast<mp_bitcnt_t>(d.exponent);
        REQUIRE(gap <= bound);
      }
    }
  }
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare("10", "11") == LexOrder::less);
  CHECK(lex_compare("110", "110") == LexOrder::equal_so_far);
  CHECK(lex_compare("1101", "1100") == LexOrder::greater);
  CHECK(lex_compare("11", "1100") == LexOrder::equal_so_far);
}
