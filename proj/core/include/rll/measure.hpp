#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rll/rational.hpp"
#include "rll/run_state.hpp"
#include "rll/words.hpp"

namespace rll {

/// A pullback recurrence failed to hold; always an implementation bug.
class RecurrenceMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tolerance for identities checked in binary64 mode.
inline constexpr double kFloatTolerance = 1e-9;

/// The (p, 1-p) Bernoulli-type measure on Lambda_m: mass splits p / 1-p at
/// every free branch and passes through forced branches unchanged.
template <class Scalar>
class BernoulliTypeMeasure {
 public:
  BernoulliTypeMeasure(int m, Scalar p);

  int order() const noexcept { return m_; }
  const Scalar& p() const noexcept { return p_; }
  Mode mode() const noexcept { return mode_of<Scalar>(); }

  /// Probability of appending `digit` at a free branch.
  Scalar branch_weight(int digit) const { return digit == 0 ? p_ : Scalar(1 - p_); }

  /// mu[w] by the step-by-step construction; 0 for inadmissible words.
  Scalar mu_recursive(std::string_view w) const;

  /// p^{N0(w)} (1-p)^{N1(w)}; throws std::invalid_argument for inadmissible w.
  Scalar mu_closed(const Word& w) const;
  Scalar mu_closed(std::string_view w) const { return mu_closed(Word(std::string(w), m_)); }

  /// mu(sigma^{-k}[w]) by dynamic programming over run states.
  Scalar pullback_cylinder(std::string_view w, std::size_t k) const;

  /// (1/n) sum_{k<n} mu(sigma^{-k}[w]).
  Scalar cesaro_lambda(std::string_view w, std::size_t n) const;

 private:
  int m_;
  Scalar p_;
};

/// Mass distribution over run states of the length-k prefixes u, i.e.
/// entry s holds the total mu[u] over admissible u of length k ending in s.
/// Before the first step the distribution is "at start": nothing has been
/// emitted and both digits are free.
template <class Scalar>
class PullbackDp {
 public:
  explicit PullbackDp(const BernoulliTypeMeasure<Scalar>& measure);

  std::size_t depth() const noexcept { return depth_; }

  /// Extends every prefix by one digit (k -> k+1).
  void step();

  /// Sum over the current prefixes u of mu[u w].
  Scalar mass_of(std::string_view w) const;

 private:
  const BernoulliTypeMeasure<Scalar>* measure_;
  std::vector<Scalar> mass_;
  std::size_t depth_ = 0;
};

/// a_k, b_k, c_k, d_k: pullbacks of [0], [1], [01], [10], with running
/// Cesaro averages of a_k.
template <class Scalar>
struct PullbackSeries {
  std::vector<Scalar> a;
  std::vector<Scalar> b;
  std::vector<Scalar> c;
  std::vector<Scalar> d;
  std::vector<Scalar> cesaro_a;  // cesaro_a[n-1] = (1/n) sum_{k<n} a_k
};

/// Series for k = 0..kmax. Also verifies, for m <= k <= kmax,
///   a_k = sum_{j=1}^{m-1} p^{j-1} d_{k-j}
///   c_k = sum_{j=1}^{m-2} (1-p) p^{j-1} d_{k-j} + p^{m-2} d_{k-m+1}
/// and throws RecurrenceMismatch on failure (exact in exact mode,
/// kFloatTolerance otherwise). Requires kmax >= m.
template <class Scalar>
PullbackSeries<Scalar> pullback_series(const BernoulliTypeMeasure<Scalar>& measure,
                                       std::size_t kmax);

/// Checks the a_k and c_k recurrences on an existing series; returns the
/// first failing k or 0 when all hold (k = 0 can never fail).
template <class Scalar>
std::size_t first_recurrence_failure(const PullbackSeries<Scalar>& series, int m, const Scalar& p);

/// (p - p^m) / (1 - p^m - (1-p)^m).
template <class Scalar>
Scalar lambda0_closed(int m, const Scalar& p);

struct QuasiBernoulliViolation {
  std::string w;
  std::string v;
  bool lower = true;  // which side of mu[w]mu[v] <= mu[wv] <= C mu[w]mu[v] failed
};

/// Exhaustive check over admissible w, v (empty allowed) with wv admissible
/// and |w| + |v| <= max_total_length.
std::vector<QuasiBernoulliViolation> quasi_bernoulli_check(
    const BernoulliTypeMeasure<Rational>& measure, int max_total_length, unsigned workers = 1);

struct PullbackBoundViolation {
  std::string w;
  std::size_t k = 0;
  Rational ratio;  // pullback / mu[w]
};

/// c^{-1} mu[w] <= mu(sigma^{-k}[w]) <= c mu[w], c = p^-2 (1-p)^-2, for
/// admissible 1 <= |w| <= max_length and 1 <= k <= kmax.
std::vector<PullbackBoundViolation> pullback_bounds_check(
    const BernoulliTypeMeasure<Rational>& measure, int max_length, std::size_t kmax,
    unsigned workers = 1);

extern template class BernoulliTypeMeasure<Rational>;
extern template class BernoulliTypeMeasure<double>;
extern template class PullbackDp<Rational>;
extern template class PullbackDp<double>;

}  // namespace rll
