#include "rll/measure.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "rll/parallel.hpp"

namespace rll {

namespace {

template <class Scalar>
bool nearly_equal(const Scalar& x, const Scalar& y) {
  if constexpr (is_exact_v<Scalar>) {
    return x == y;
  } else {
    return std::abs(x - y) <= kFloatTolerance;
  }
}

// Product of branch weights along w starting from run state s; 0 if w leaves Lambda_m.
template <class Scalar>
Scalar path_factor(const BernoulliTypeMeasure<Scalar>& measure, RunState s, std::string_view w) {
  Scalar factor = 1;
  for (char c : w) {
    const int digit = c - '0';
    switch (classify_step(s, digit, measure.order())) {
      case Branch::forbidden: return Scalar(0);
      case Branch::free: factor *= measure.branch_weight(digit); break;
      case Branch::forced: break;
    }
    s = advance(s, digit);
  }
  return factor;
}

template <class Scalar>
Scalar path_from_start(const BernoulliTypeMeasure<Scalar>& measure, std::string_view w) {
  if (w.empty()) return Scalar(1);
  const int first = w.front() - '0';
  Scalar head = measure.branch_weight(first);
  return head * path_factor(measure, RunState{first, 1}, w.substr(1));
}

}  // namespace

template <class Scalar>
BernoulliTypeMeasure<Scalar>::BernoulliTypeMeasure(int m, Scalar p) : m_(checked_order(m)), p_(std::move(p)) {
  if (!(p_ > 0 && p_ < 1)) throw std::invalid_argument("p must lie in the open interval (0,1)");
}

template <class Scalar>
Scalar BernoulliTypeMeasure<Scalar>::mu_recursive(std::string_view w) const {
  if (!is_binary(w)) throw std::invalid_argument("word must consist of '0' and '1' only");
  const auto limit = static_cast<std::size_t>(m_);
  Scalar value = 1;
  std::string prefix;
  prefix.reserve(w.size() + 1);
  for (char c : w) {
    const char other = c == '0' ? '1' : '0';
    // The prefix is admissible, so only the trailing run of a child can be too long.
    prefix.push_back(other);
    const bool sibling_ok = trailing_run(prefix) < limit;
    prefix.back() = c;
    if (trailing_run(prefix) >= limit) return Scalar(0);
    if (sibling_ok) value *= branch_weight(c - '0');
  }
  return value;
}

template <class Scalar>
Scalar BernoulliTypeMeasure<Scalar>::mu_closed(const Word& w) const {
  if (w.order() != m_) throw std::invalid_argument("word order does not match the measure");
  const OccurrenceReport report = occurrence_report(w);
  return power(p_, static_cast<unsigned>(report.n0)) *
         power(Scalar(1 - p_), static_cast<unsigned>(report.n1));
}

template <class Scalar>
Scalar BernoulliTypeMeasure<Scalar>::pullback_cylinder(std::string_view w, std::size_t k) const {
  PullbackDp<Scalar> dp(*this);
  for (std::size_t i = 0; i < k; ++i) dp.step();
  return dp.mass_of(w);
}

template <class Scalar>
Scalar BernoulliTypeMeasure<Scalar>::cesaro_lambda(std::string_view w, std::size_t n) const {
  if (n == 0) throw std::invalid_argument("cesaro_lambda requires n >= 1");
  PullbackDp<Scalar> dp(*this);
  Scalar total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) dp.step();
    total += dp.mass_of(w);
  }
  return Scalar(total / static_cast<long>(n));
}

template <class Scalar>
PullbackDp<Scalar>::PullbackDp(const BernoulliTypeMeasure<Scalar>& measure)
    : measure_(&measure), mass_(state_count(measure.order()), Scalar(0)) {}

template <class Scalar>
void PullbackDp<Scalar>::step() {
  const int m = measure_->order();
  std::vector<Scalar> next(mass_.size(), Scalar(0));
  if (depth_ == 0) {
    next[state_index(RunState{0, 1}, m)] = measure_->branch_weight(0);
    next[state_index(RunState{1, 1}, m)] = measure_->branch_weight(1);
  } else {
    for (std::size_t i = 0; i < mass_.size(); ++i) {
      if (mass_[i] == 0) continue;
      const RunState s = state_at(i, m);
      for (int digit : {0, 1}) {
        const Branch branch = classify_step(s, digit, m);
        if (branch == Branch::forbidden) continue;
        const std::size_t target = state_index(advance(s, digit), m);
        if (branch == Branch::free) {
          next[target] += mass_[i] * measure_->branch_weight(digit);
        } else {
          next[target] += mass_[i];
        }
      }
    }
  }
  mass_ = std::move(next);
  ++depth_;
}

template <class Scalar>
Scalar PullbackDp<Scalar>::mass_of(std::string_view w) const {
  if (!is_binary(w)) throw std::invalid_argument("word must consist of '0' and '1' only");
  if (depth_ == 0) return path_from_start(*measure_, w);
  Scalar total = 0;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (mass_[i] == 0) continue;
    total += mass_[i] * path_factor(*measure_, state_at(i, measure_->order()), w);
  }
  return total;
}

template <class Scalar>
std::size_t first_recurrence_failure(const PullbackSeries<Scalar>& series, int m, const Scalar& p) {
  const Scalar q = 1 - p;
  const auto width = static_cast<std::size_t>(m);
  for (std::size_t k = width; k < series.a.size(); ++k) {
    Scalar a_rhs = 0;
    Scalar c_rhs = 0;
    Scalar p_power = 1;  // p^{j-1}
    for (std::size_t j = 1; j + 1 <= width - 1; ++j) {
      a_rhs += p_power * series.d[k - j];
      c_rhs += q * p_power * series.d[k - j];
      p_power *= p;
    }
    // j = m-1 term: p^{m-2} d_{k-m+1} in both recurrences.
    a_rhs += p_power * series.d[k - (width - 1)];
    c_rhs += p_power * series.d[k - (width - 1)];
    if (!nearly_equal(series.a[k], a_rhs) || !nearly_equal(series.c[k], c_rhs)) return k;
  }
  return 0;
}

template <class Scalar>
PullbackSeries<Scalar> pullback_series(const BernoulliTypeMeasure<Scalar>& measure,
                                       std::size_t kmax) {
  if (kmax < static_cast<std::size_t>(measure.order())) {
    throw std::invalid_argument("pullback_series requires kmax >= m");
  }
  PullbackSeries<Scalar> series;
  for (auto* column : {&series.a, &series.b, &series.c, &series.d, &series.cesaro_a}) {
    column->reserve(kmax + 1);
  }
  PullbackDp<Scalar> dp(measure);
  Scalar running = 0;
  for (std::size_t k = 0; k <= kmax; ++k) {
    if (k > 0) dp.step();
    series.a.push_back(dp.mass_of("0"));
    series.b.push_back(dp.mass_of("1"));
    series.c.push_back(dp.mass_of("01"));
    series.d.push_back(dp.mass_of("10"));
    running += series.a.back();
    series.cesaro_a.push_back(Scalar(running / static_cast<long>(k + 1)));
  }
  if (const std::size_t k = first_recurrence_failure(series, measure.order(), measure.p()); k != 0) {
    throw RecurrenceMismatch("pullback recurrence fails at k = " + std::to_string(k));
  }
  return series;
}

template <class Scalar>
Scalar lambda0_closed(int m, const Scalar& p) {
  checked_order(m);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in the open interval (0,1)");
  const auto exponent = static_cast<unsigned>(m);
  const Scalar pm = power(p, exponent);
  const Scalar qm = power(Scalar(1 - p), exponent);
  return Scalar((p - pm) / (1 - pm - qm));
}

namespace {

std::unordered_map<std::string, Rational> measure_table(const BernoulliTypeMeasure<Rational>& measure,
                                                        const std::vector<Word>& words) {
  std::unordered_map<std::string, Rational> table;
  table.reserve(words.size());
  for (const Word& w : words) table.emplace(w.symbols(), measure.mu_closed(w));
  return table;
}

}  // namespace

std::vector<QuasiBernoulliViolation> quasi_bernoulli_check(
    const BernoulliTypeMeasure<Rational>& measure, int max_total_length, unsigned workers) {
  const int m = measure.order();
  const auto words = enumerate_words_up_to(m, max_total_length);
  const auto table = measure_table(measure, words);
  const Rational upper_factor = 1 / (measure.p() * (1 - measure.p()));

  auto per_w = parallel_map(words.size(), workers, [&](std::size_t i) {
    std::vector<QuasiBernoulliViolation> found;
    const std::string& w = words[i].symbols();
    const Rational& mu_w = table.at(w);
    for (const Word& v_word : words) {
      const std::string& v = v_word.symbols();
      if (w.size() + v.size() > static_cast<std::size_t>(max_total_length)) break;
      const std::string wv = w + v;
      if (!is_admissible(wv, m)) continue;
      const Rational product = mu_w * table.at(v);
      const Rational& joint = table.at(wv);
      if (product > joint) found.push_back({w, v, true});
      if (joint > upper_factor * product) found.push_back({w, v, false});
    }
    return found;
  });

  std::vector<QuasiBernoulliViolation> violations;
  for (auto& chunk : per_w) violations.insert(violations.end(), chunk.begin(), chunk.end());
  return violations;
}

std::vector<PullbackBoundViolation> pullback_bounds_check(
    const BernoulliTypeMeasure<Rational>& measure, int max_length, std::size_t kmax,
    unsigned workers) {
  const int m = measure.order();
  auto words = enumerate_words_up_to(m, max_length);
  words.erase(words.begin());  // drop the empty word

  const Rational pq = measure.p() * (1 - measure.p());
  const Rational c = 1 / (pq * pq);

  std::vector<PullbackDp<Rational>> snapshots;
  PullbackDp<Rational> dp(measure);
  for (std::size_t k = 1; k <= kmax; ++k) {
    dp.step();
    snapshots.push_back(dp);
  }

  auto per_w = parallel_map(words.size(), workers, [&](std::size_t i) {
    std::vector<PullbackBoundViolation> found;
    const std::string& w = words[i].symbols();
    const Rational mu_w = measure.mu_closed(words[i]);
    for (std::size_t k = 1; k <= kmax; ++k) {
      const Rational pulled = snapshots[k - 1].mass_of(w);
      if (pulled * c < mu_w || pulled > c * mu_w) {
        found.push_back({w, k, Rational(pulled / mu_w)});
      }
    }
    return found;
  });

  std::vector<PullbackBoundViolation> violations;
  for (auto& chunk : per_w) violations.insert(violations.end(), chunk.begin(), chunk.end());
  return violations;
}

template class BernoulliTypeMeasure<Rational>;
template class BernoulliTypeMeasure<double>;
template class PullbackDp<Rational>;
template class PullbackDp<double>;

template PullbackSeries<Rational> pullback_series(const BernoulliTypeMeasure<Rational>&, std::size_t);
template PullbackSeries<double> pullback_series(const BernoulliTypeMeasure<double>&, std::size_t);
template std::size_t first_recurrence_failure(const PullbackSeries<Rational>&, int, const Rational&);
template std::size_t first_recurrence_failure(const PullbackSeries<double>&, int, const double&);
template Rational lambda0_closed(int, const Rational&);
template double lambda0_closed(int, const double&);

}  // namespace rll
