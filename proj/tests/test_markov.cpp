#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rll/dimension.hpp"
#include "rll/markov.hpp"
#include "rll/measure.hpp"

using namespace rll;

TEST_CASE("build_chain structure") {
  const Rational p(1, 3);
  const auto chain = build_chain(3, p);
  CHECK(chain.size() == 4);
  CHECK(chain.kernel[state_index({0, 2}, 3)][state_index({1, 1}, 3)] == 1);
  const auto chain4 = build_chain(4, p);
  CHECK(chain4.kernel[state_index({0, 2}, 4)][state_index({0, 3}, 4)] == p);
  CHECK(chain4.kernel[state_index({1, 1}, 4)][state_index({1, 2}, 4)] == 1 - p);
  for (int m : {3, 4, 5, 8}) {
    const auto c = build_chain(m, Rational(2, 7));
    for (const auto& row : c.kernel) {
      Rational sum = 0;
      for (const auto& x : row) sum += x;
      REQUIRE(sum == 1);
    }
    CHECK(is_irreducible(c));
    CHECK(chain_period(c) == 1);
  }
  CHECK_THROWS_AS(build_chain(3, Rational(0)), std::invalid_argument);
}

TEST_CASE("path_measure examples") {
  const Rational p(2, 7);
  const auto chain = build_chain(3, p);
  CHECK(path_measure(chain, "001") == p * p);
  CHECK(path_measure(chain, "010") == p * (1 - p) * p);
  CHECK(path_measure(chain, "0011") == p * p * (1 - p));
  CHECK(path_measure(chain, "000") == 0);
}

TEST_CASE("path law equals the cylinder measure") {
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
      const auto chain = build_chain(m, p);
      const BernoulliTypeMeasure<Rational> mu(m, p);
      for (const auto& w : enumerate_words_up_to(m, 12)) {
        REQUIRE(path_measure(chain, w.symbols()) == mu.mu_closed(w));
      }
    }
  }
}

TEST_CASE("stationary distribution") {
  const Rational p(3, 11);
  const auto pi = stationary(build_chain(3, p));
  CHECK(digit_mass(pi, 3, 0) == (1 + p) / 3);
  CHECK(digit_mass(pi, 3, 0) + digit_mass(pi, 3, 1) == 1);
  CHECK(digit_mass(stationary(build_chain(3, Rational(1, 2))), 3, 0) == Rational(1, 2));
  const auto chain = build_chain(5, Rational(2, 9));
  const auto pi5 = stationary(chain);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    Rational flow = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) flow += pi5[i] * chain.kernel[i][j];
    REQUIRE(flow == pi5[j]);
  }
}

TEST_CASE("stationary digit-0 mass equals the closed form exactly") {
  for (int m : {3, 4, 5, 6}) {
    for (const Rational& p : {Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(2, 3)}) {
      REQUIRE(digit_mass(stationary(build_chain(m, p)), m, 0) == lambda0_closed(m, p));
    }
  }
  const auto pi = stationary(build_chain(4, 0.3));
  CHECK(digit_mass(pi, 4, 0) == doctest::Approx(lambda0_closed(4, 0.3)).epsilon(1e-13));
}

TEST_CASE("counter RNG is a pure function of (seed, stream, counter)") {
  const CounterRng a(42, 0);
  const CounterRng b(42, 0);
  const CounterRng c(42, 1);
  int differ = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    REQUIRE(a.bits(i) == b.bits(i));
    differ += a.bits(i) != c.bits(i) ? 1 : 0;
    const double u = a.uniform(i);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(differ == 1000);
}

TEST_CASE("sampling is deterministic and admissible") {
  const auto chain = build_chain(3, 0.2);
  const SampleRun first = sample(chain, 50000, 7);
  const SampleRun again = sample(chain, 50000, 7);
  CHECK(first.word == again.word);
  CHECK(first.neg_log_mu == again.neg_log_mu);
  CHECK(sample(chain, 50000, 8).word != first.word);
  CHECK(sample(chain, 50000, 7, 1).word != first.word);
  CHECK(longest_run(first.word) <= 2);
  CHECK(first.zeros.size() == first.size() + 1);
  // Prefix of a longer run is the shorter run.
  CHECK(sample(chain, 1000, 7).word == first.word.substr(0, 1000));
  CHECK_THROWS_AS(sample(chain, 0, 7), std::invalid_argument);
}

TEST_CASE("running log-measure matches the closed form on the sampled prefix") {
  const auto chain = build_chain(4, 0.35);
  const SampleRun run = sample(chain, 400, 99);
  const BernoulliTypeMeasure<double> mu(4, 0.35);
  for (std::size_t n : {1, 5, 50, 400}) {
    const double expected = -std::log(mu.mu_closed(run.word.substr(0, n)));
    CHECK(run.neg_log_mu[n - 1] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("digit frequencies approach the stationary mass") {
  const double q = 0.2;
  const auto chain = build_chain(3, q);
  const SampleRun run = sample(chain, 1000000, 20190611);
  const double target = lambda0_closed(3, q);
  CHECK(target == doctest::Approx(0.4));
  const double sigma = batch_means_sigma(run);
  const double freq = run.frequency0(run.size());
  CHECK(std::abs(freq - target) <= 0.002);
  CHECK(std::abs(freq - target) <= 3.0 * sigma / std::sqrt(1e6));

  const SampleRun sym = sample(build_chain(3, 0.5), 1000000, 5);
  CHECK(std::abs(sym.frequency0(sym.size()) - 0.5) <= 0.002);
}

TEST_CASE("empirical local dimension") {
  const SampleRun run = sample(build_chain(3, 0.5), 1000000, 11);
  const auto series = empirical_local_dimension(run, 0.5);
  for (double x : series) REQUIRE(x >= 0.0);
  CHECK(series.back() >= 0.5 - 0.01);

  const SampleRun low = sample(build_chain(3, 0.2), 1000000, 3);
  CHECK(empirical_local_dimension(low, 0.2).back() >= lower_bound(3, 0.4, 0.2) - 0.01);
  CHECK_THROWS_AS(empirical_local_dimension(low, 1.0), std::invalid_argument);
}

TEST_CASE("compensated summation") {
  CompensatedSum sum;
  sum.add(1.0);
  for (int i = 0; i < 10; ++i) sum.add(1e-16);
  sum.add(-1.0);
  CHECK(sum.value() == doctest::Approx(1e-15).epsilon(1e-6));
}
