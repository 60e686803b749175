#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rll/rational.hpp"
#include "rll/run_state.hpp"

namespace rll {

/// Run-state chain whose path law is the Bernoulli-type measure mu_p.
/// From (d, r) with r < m-1 the chain repeats d with its branch weight and
/// switches otherwise; from (d, m-1) it switches with probability 1.
template <class Scalar>
struct ChainSpec {
  int m = 3;
  Scalar p;
  std::vector<std::vector<Scalar>> kernel;  // kernel[from][to]
  std::vector<Scalar> initial;              // p on (0,1), 1-p on (1,1)

  std::size_t size() const noexcept { return initial.size(); }
};

template <class Scalar>
ChainSpec<Scalar> build_chain(int m, const Scalar& p);

/// Product of transition probabilities along w from the initial law; 0 when
/// w is inadmissible.
template <class Scalar>
Scalar path_measure(const ChainSpec<Scalar>& chain, std::string_view w);

/// Unique invariant probability vector, by Gaussian elimination on
/// (P^T - I) pi = 0 with one row replaced by sum(pi) = 1. In exact mode the
/// result is exact. Throws std::logic_error if the system is singular.
template <class Scalar>
std::vector<Scalar> stationary(const ChainSpec<Scalar>& chain);

/// Stationary mass on states whose last digit is `digit`.
template <class Scalar>
Scalar digit_mass(const std::vector<Scalar>& distribution, int m, int digit);

template <class Scalar>
bool is_irreducible(const ChainSpec<Scalar>& chain);

/// gcd of cycle lengths through state 0 (the chain's period when irreducible).
template <class Scalar>
std::size_t chain_period(const ChainSpec<Scalar>& chain);

/// Counter-based generator: draw i of stream s is a pure function of
/// (seed, s, i), so any chunking of a stream reproduces the same values.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t bits(std::uint64_t counter) const;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const;

 private:
  std::uint64_t key_;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

struct SampleRun {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  int m = 3;
  double p = 0.5;
  std::string word;
  std::vector<std::uint32_t> zeros;   // zeros[n] = |w_1..w_n|_0, zeros[0] = 0
  std::vector<double> neg_log_mu;     // neg_log_mu[n-1] = -log mu_p[w_1..w_n]

  std::size_t size() const noexcept { return word.size(); }
  double frequency0(std::size_t n) const { return static_cast<double>(zeros[n]) / static_cast<double>(n); }
};

/// Length-n path of the chain. Draw i of the generator decides symbol i+1;
/// forced steps consume their draw as well so positions stay aligned.
SampleRun sample(const ChainSpec<double>& chain, std::size_t n, std::uint64_t seed,
                 std::uint64_t stream = 0);

/// n -> -log mu_q[w|_n] / (n log 2) for n = 1..|w|, evaluated along the sampled
/// path for an arbitrary parameter q in (0,1).
std::vector<double> empirical_local_dimension(const SampleRun& run, double q);

/// Batch-means estimate of the asymptotic standard deviation of the digit-0
/// indicator: sqrt(batch_length * var(batch means)).
double batch_means_sigma(const SampleRun& run, std::size_t batches = 100);

extern template struct ChainSpec<Rational>;
extern template struct ChainSpec<double>;

}  // namespace rll
