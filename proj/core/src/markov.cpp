#include "rll/markov.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "rll/words.hpp"

namespace rll {

template <class Scalar>
ChainSpec<Scalar> build_chain(int m, const Scalar& p) {
  checked_order(m);
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in the open interval (0,1)");
  ChainSpec<Scalar> chain;
  chain.m = m;
  chain.p = p;
  const std::size_t n = state_count(m);
  chain.kernel.assign(n, std::vector<Scalar>(n, Scalar(0)));
  chain.initial.assign(n, Scalar(0));
  const Scalar q = 1 - p;
  for (std::size_t i = 0; i < n; ++i) {
    const RunState s = state_at(i, m);
    const Scalar& stay = s.digit == 0 ? p : q;
    const Scalar& leave = s.digit == 0 ? q : p;
    const std::size_t switched = state_index(RunState{1 - s.digit, 1}, m);
    if (s.run < m - 1) {
      chain.kernel[i][state_index(RunState{s.digit, s.run + 1}, m)] = stay;
      chain.kernel[i][switched] = leave;
    } else {
      chain.kernel[i][switched] = 1;
    }
  }
  chain.initial[state_index(RunState{0, 1}, m)] = p;
  chain.initial[state_index(RunState{1, 1}, m)] = q;
  return chain;
}

template <class Scalar>
Scalar path_measure(const ChainSpec<Scalar>& chain, std::string_view w) {
  if (!is_binary(w)) throw std::invalid_argument("word must consist of '0' and '1' only");
  if (w.empty()) return Scalar(1);
  RunState s{w.front() - '0', 1};
  Scalar value = chain.initial[state_index(s, chain.m)];
  for (std::size_t i = 1; i < w.size(); ++i) {
    const int digit = w[i] - '0';
    const RunState next = digit == s.digit ? RunState{s.digit, s.run + 1} : RunState{digit, 1};
    if (next.run > chain.m - 1) return Scalar(0);
    value *= chain.kernel[state_index(s, chain.m)][state_index(next, chain.m)];
    if (value == 0) return value;
    s = next;
  }
  return value;
}

template <class Scalar>
std::vector<Scalar> stationary(const ChainSpec<Scalar>& chain) {
  const std::size_t n = chain.size();
  // Augmented system A pi = e_last: rows 0..n-2 are balance equations,
  // the last row is normalization.
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n + 1, Scalar(0)));
  for (std::size_t row = 0; row + 1 < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) a[row][col] = chain.kernel[col][row];
    a[row][row] -= 1;
  }
  for (std::size_t col = 0; col < n; ++col) a[n - 1][col] = 1;
  a[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (is_exact_v<Scalar>) {
      while (pivot < n && a[pivot][col] == 0) ++pivot;
    } else {
      for (std::size_t r = col + 1; r < n; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
      }
    }
    if (pivot == n || a[pivot][col] == 0) {
      throw std::logic_error("stationary system is singular; chain is not irreducible");
    }
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Scalar> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
  return pi;
}

template <class Scalar>
Scalar digit_mass(const std::vector<Scalar>& distribution, int m, int digit) {
  Scalar total = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (state_at(i, m).digit == digit) total += distribution[i];
  }
  return total;
}

namespace {

template <class Scalar>
std::vector<std::size_t> bfs_levels(const ChainSpec<Scalar>& chain, bool reverse) {
  const std::size_t n = chain.size();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, unseen);
  std::queue<std::size_t> frontier;
  level[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t from = frontier.front();
    frontier.pop();
    for (std::size_t to = 0; to < n; ++to) {
      const Scalar& weight = reverse ? chain.kernel[to][from] : chain.kernel[from][to];
      if (weight == 0 || level[to] != unseen) continue;
      level[to] = level[from] + 1;
      frontier.push(to);
    }
  }
  return level;
}

}  // namespace

template <class Scalar>
bool is_irreducible(const ChainSpec<Scalar>& chain) {
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  for (bool reverse : {false, true}) {
    const auto level = bfs_levels(chain, reverse);
    for (std::size_t l : level) {
      if (l == unseen) return false;
    }
  }
  return true;
}

template <class Scalar>
std::size_t chain_period(const ChainSpec<Scalar>& chain) {
  // For an irreducible chain the period is gcd over edges u->v of level(u)+1-level(v).
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  const auto level = bfs_levels(chain, false);
  std::size_t g = 0;
  for (std::size_t u = 0; u < chain.size(); ++u) {
    if (level[u] == unseen) continue;
    for (std::size_t v = 0; v < chain.size(); ++v) {
      if (chain.kernel[u][v] == 0 || level[v] == unseen) continue;
      const auto diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
      g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
    }
  }
  return g;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed) ^ (stream * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL))) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
  return mix64(key_ + mix64(counter + 0x9E3779B97F4A7C15ULL));
}

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

SampleRun sample(const ChainSpec<double>& chain, std::size_t n, std::uint64_t seed,
                 std::uint64_t stream) {
  if (n == 0) throw std::invalid_argument("sample length must be >= 1");
  const CounterRng rng(seed, stream);
  SampleRun run;
  run.seed = seed;
  run.stream = stream;
  run.m = chain.m;
  run.p = chain.p;
  run.word.reserve(n);
  run.zeros.reserve(n + 1);
  run.neg_log_mu.reserve(n);
  run.zeros.push_back(0);

  const double log_p = std::log(chain.p);
  const double log_q = std::log1p(-chain.p);
  CompensatedSum neg_log;
  RunState s{};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform(i);
    int digit = 0;
    bool free = true;
    if (i > 0 && s.run >= chain.m - 1) {
      digit = 1 - s.digit;
      free = false;
    } else {
      digit = u < chain.p ? 0 : 1;
    }
    if (free) neg_log.add(-(digit == 0 ? log_p : log_q));
    s = i == 0 ? RunState{digit, 1} : advance(s, digit);
    run.word.push_back(static_cast<char>('0' + digit));
    run.zeros.push_back(run.zeros.back() + (digit == 0 ? 1U : 0U));
    run.neg_log_mu.push_back(neg_log.value());
  }
  return run;
}

std::vector<double> empirical_local_dimension(const SampleRun& run, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in the open interval (0,1)");
  const double log_q0 = std::log(q);
  const double log_q1 = std::log1p(-q);
  const double log2 = std::log(2.0);
  std::vector<double> series;
  series.reserve(run.size());
  CompensatedSum neg_log;
  RunState s{};
  for (std::size_t i = 0; i < run.size(); ++i) {
    const int digit = run.word[i] - '0';
    Branch branch = Branch::free;
    if (i > 0) branch = classify_step(s, digit, run.m);
    if (branch == Branch::forbidden) {
      throw std::invalid_argument("sampled word is not admissible for its order");
    }
    if (branch == Branch::free) neg_log.add(-(digit == 0 ? log_q0 : log_q1));
    s = i == 0 ? RunState{digit, 1} : advance(s, digit);
    series.push_back(neg_log.value() / (static_cast<double>(i + 1) * log2));
  }
  return series;
}

double batch_means_sigma(const SampleRun& run, std::size_t batches) {
  const std::size_t n = run.size();
  if (batches < 2 || n < 2 * batches) throw std::invalid_argument("too few symbols for batch means");
  const std::size_t length = n / batches;
  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    const auto zeros = run.zeros[(b + 1) * length] - run.zeros[b * length];
    means[b] = static_cast<double>(zeros) / static_cast<double>(length);
  }
  const double mean = std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(batches);
  double var = 0.0;
  for (double x : means) var += (x - mean) * (x - mean);
  var /= static_cast<double>(batches - 1);
  return std::sqrt(static_cast<double>(length) * var);
}

template struct ChainSpec<Rational>;
template struct ChainSpec<double>;

template ChainSpec<Rational> build_chain(int, const Rational&);
template ChainSpec<double> build_chain(int, const double&);
template Rational path_measure(const ChainSpec<Rational>&, std::string_view);
template double path_measure(const ChainSpec<double>&, std::string_view);
template std::vector<Rational> stationary(const ChainSpec<Rational>&);
template std::vector<double> stationary(const ChainSpec<double>&);
template Rational digit_mass(const std::vector<Rational>&, int, int);
template double digit_mass(const std::vector<double>&, int, int);
template bool is_irreducible(const ChainSpec<Rational>&);
template bool is_irreducible(const ChainSpec<double>&);
template std::size_t chain_period(const ChainSpec<Rational>&);
template std::size_t chain_period(const ChainSpec<double>&);

}  // namespace rll
