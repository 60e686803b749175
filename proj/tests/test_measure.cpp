#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rll/measure.hpp"

using namespace rll;

namespace {

const Rational third(1, 3);
const Rational half(1, 2);

}  // namespace

TEST_CASE("measure construction validates parameters") {
  CHECK_THROWS_AS(BernoulliTypeMeasure<Rational>(3, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliTypeMeasure<Rational>(3, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(BernoulliTypeMeasure<double>(2, 0.5), std::invalid_argument);
  CHECK(BernoulliTypeMeasure<double>(3, 0.5).mode() == Mode::real);
  CHECK(BernoulliTypeMeasure<Rational>(3, half).mode() == Mode::exact);
}

TEST_CASE("mu_recursive examples") {
  const Rational p(2, 7);
  const BernoulliTypeMeasure<Rational> mu(3, p);
  CHECK(mu.mu_recursive("01") == p * (1 - p));
  CHECK(mu.mu_recursive("001") == p * p);
  CHECK(mu.mu_recursive("000") == 0);
  CHECK(mu.mu_recursive("") == 1);
}

TEST_CASE("mu_closed examples") {
  const Rational p(2, 7);
  const BernoulliTypeMeasure<Rational> mu(3, p);
  CHECK(mu.mu_closed("010") == p * p * (1 - p));
  CHECK(mu.mu_closed("001") == p * p);
  CHECK(mu.mu_closed("101") == p * (1 - p) * (1 - p));
  CHECK_THROWS_AS(mu.mu_closed("000"), std::invalid_argument);
}

TEST_CASE("closed form, recursion and brute-force construction agree exactly") {
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {third, half, Rational(2, 3)}) {
      const BernoulliTypeMeasure<Rational> mu(m, p);
      for (std::size_t n = 0; n <= 10; ++n) {
        for (const auto& s : oracle::all_strings(n)) {
          const Rational expected = oracle::mu(s, m, p);
          REQUIRE(mu.mu_recursive(s) == expected);
          if (oracle::admissible(s, m)) REQUIRE(mu.mu_closed(s) == expected);
        }
      }
    }
  }
}

TEST_CASE("cylinder masses over Lambda_m^n sum to one") {
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {third, half, Rational(2, 3)}) {
      const BernoulliTypeMeasure<Rational> mu(m, p);
      for (int n = 1; n <= 12; ++n) {
        Rational total = 0;
        for (const auto& w : enumerate_words(m, n)) total += mu.mu_recursive(w.symbols());
        REQUIRE(total == 1);
      }
    }
  }
}

TEST_CASE("pullback_cylinder examples") {
  const Rational p(2, 7);
  const BernoulliTypeMeasure<Rational> mu(3, p);
  CHECK(mu.pullback_cylinder("0", 1) == p);
  CHECK(mu.pullback_cylinder("01", 1) == p * p + p * (1 - p) * (1 - p));
  CHECK(mu.pullback_cylinder("01", 0) == mu.mu_closed("01"));
  CHECK(mu.pullback_cylinder("", 5) == 1);
  CHECK(mu.pullback_cylinder("000", 3) == 0);
}

TEST_CASE("pullback DP equals summation over all prefixes") {
  for (int m : {3, 4}) {
    const Rational p(2, 5);
    const BernoulliTypeMeasure<Rational> mu(m, p);
    for (std::size_t len = 1; len <= 4; ++len) {
      for (const auto& w : oracle::admissible_words(m, len)) {
        for (std::size_t k = 0; k <= 7; ++k) {
          REQUIRE(mu.pullback_cylinder(w, k) == oracle::pullback(w, k, m, p));
        }
      }
    }
  }
}

TEST_CASE("pullback decomposes over the digit in front") {
  const BernoulliTypeMeasure<Rational> mu(4, third);
  for (const auto& w : enumerate_words_up_to(4, 6)) {
    for (std::size_t k = 1; k <= 6; ++k) {
      Rational sum = 0;
      for (const char x : {'0', '1'}) {
        const std::string xw = std::string(1, x) + w.symbols();
        if (is_admissible(xw, 4)) sum += mu.pullback_cylinder(xw, k - 1);
      }
      REQUIRE(mu.pullback_cylinder(w.symbols(), k) == sum);
    }
  }
}

TEST_CASE("digit symmetry at p = 1/2") {
  const BernoulliTypeMeasure<Rational> mu(3, half);
  for (const auto& w : enumerate_words_up_to(3, 6)) {
    for (std::size_t k = 0; k <= 6; ++k) {
      REQUIRE(mu.pullback_cylinder(w.symbols(), k) ==
              mu.pullback_cylinder(complement(w.symbols()), k));
    }
  }
}

TEST_CASE("non-invariance witness") {
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {third, Rational(2, 5), Rational(2, 3)}) {
      const BernoulliTypeMeasure<Rational> mu(m, p);
      const std::string w = std::string(static_cast<std::size_t>(m - 2), '0') + "1";
      const Rational pulled = mu.pullback_cylinder(w, 1);
      CHECK(pulled == power(p, m - 1) + power(p, m - 2) * (1 - p) * (1 - p));
      CHECK(pulled != mu.mu_closed(w));
    }
  }
}

TEST_CASE("pullback_series examples and invariants") {
  const BernoulliTypeMeasure<Rational> mu(3, third);
  const auto s = pullback_series(mu, 20);
  CHECK(s.a[0] == third);
  CHECK(s.a[1] == third);
  CHECK(s.a[2] == Rational(16, 27));
  for (std::size_t k = 0; k <= 20; ++k) {
    REQUIRE(s.a[k] + s.b[k] == 1);
    for (const auto* col : {&s.a, &s.b, &s.c, &s.d}) {
      REQUIRE((*col)[k] >= 0);
      REQUIRE((*col)[k] <= 1);
    }
  }
  CHECK(s.cesaro_a[2] == (s.a[0] + s.a[1] + s.a[2]) / 3);
  CHECK_THROWS_AS(pullback_series(mu, 2), std::invalid_argument);
}

TEST_CASE("series columns match brute-force pullbacks") {
  const Rational p(2, 5);
  const BernoulliTypeMeasure<Rational> mu(4, p);
  const auto s = pullback_series(mu, 8);
  for (std::size_t k = 0; k <= 8; ++k) {
    REQUIRE(s.a[k] == oracle::pullback("0", k, 4, p));
    REQUIRE(s.c[k] == oracle::pullback("01", k, 4, p));
    REQUIRE(s.d[k] == oracle::pullback("10", k, 4, p));
  }
}

TEST_CASE("recurrence check detects a corrupted series") {
  const BernoulliTypeMeasure<Rational> mu(4, third);
  auto s = pullback_series(mu, 12);
  CHECK(first_recurrence_failure(s, 4, third) == 0);
  s.a[9] += Rational(1, 1000);
  CHECK(first_recurrence_failure(s, 4, third) == 9);
}

TEST_CASE("float series obeys the recurrences for long horizons") {
  for (int m : {3, 6, 10}) {
    const BernoulliTypeMeasure<double> mu(m, 0.37);
    const auto s = pullback_series(mu, 2000);
    CHECK(first_recurrence_failure(s, m, 0.37) == 0);
    for (std::size_t k = 0; k <= 2000; ++k) REQUIRE(std::abs(s.a[k] + s.b[k] - 1.0) < 1e-12);
  }
}

TEST_CASE("lambda0_closed") {
  CHECK(lambda0_closed(3, half) == half);
  CHECK(lambda0_closed(3, third) == Rational(4, 9));
  // (1+p)/3 for m = 3 at several exact points.
  for (int i = 1; i <= 9; ++i) {
    Rational p(i, 10);
    p.canonicalize();
    REQUIRE(lambda0_closed(3, p) == (1 + p) / 3);
  }
  CHECK(lambda0_closed(7, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("cesaro_lambda") {
  const BernoulliTypeMeasure<double> mu(3, 1.0 / 3.0);
  CHECK(std::abs(mu.cesaro_lambda("0", 10000) - 4.0 / 9.0) <= 1e-3);
  const BernoulliTypeMeasure<Rational> sym(3, half);
  for (std::size_t n : {1, 2, 7, 20}) CHECK(sym.cesaro_lambda("0", n) == half);
  // c = d in the limit.
  const BernoulliTypeMeasure<double> mu4(4, 0.3);
  CHECK(std::abs(mu4.cesaro_lambda("01", 20000) - mu4.cesaro_lambda("10", 20000)) < 1e-3);
  CHECK_THROWS_AS(mu.cesaro_lambda("0", 0), std::invalid_argument);
}

TEST_CASE("quasi-Bernoulli check") {
  CHECK(quasi_bernoulli_check(BernoulliTypeMeasure<Rational>(3, third), 10).empty());
  CHECK(quasi_bernoulli_check(BernoulliTypeMeasure<Rational>(4, Rational(3, 5)), 9, 3).empty());
  const BernoulliTypeMeasure<Rational> mu(3, half);
  CHECK(mu.mu_closed("00") == mu.mu_closed("0") * mu.mu_closed("0"));
}

TEST_CASE("pullback bounds check") {
  CHECK(pullback_bounds_check(BernoulliTypeMeasure<Rational>(3, third), 8, 8).empty());
  const BernoulliTypeMeasure<Rational> mu(3, third);
  CHECK(mu.pullback_cylinder("0", 1) / mu.mu_closed("0") == 1);
  // Worker count does not change the result.
  const BernoulliTypeMeasure<Rational> mu4(4, Rational(2, 3));
  CHECK(pullback_bounds_check(mu4, 6, 6, 1).size() == pullback_bounds_check(mu4, 6, 6, 4).size());
}
