#include "rll/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "rll/dimension.hpp"
#include "rll/markov.hpp"
#include "rll/measure.hpp"
#include "rll/parallel.hpp"
#include "rll/rational.hpp"
#include "rll/univoque.hpp"
#include "rll/words.hpp"

namespace rll {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fixed(double value, int digits = 6) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << value;
  return out.str();
}

std::string scientific(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::scientific);
  out.precision(3);
  out << value;
  return out.str();
}

const std::vector<Rational>& exact_grid() {
  static const std::vector<Rational> grid{Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  return grid;
}

// Criterion 1.
Outcome occurrence_subadditivity(int max_total, unsigned workers) {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (int m : {3, 4}) {
    const auto words = enumerate_words_up_to(m, max_total);
    std::unordered_map<std::string, OccurrenceCounts> counts;
    for (const Word& w : words) counts.emplace(w.symbols(), occurrence_counts(w.symbols(), m));
    struct Tally {
      std::size_t pairs = 0;
      std::size_t violations = 0;
    };
    const auto tallies = parallel_map(words.size(), workers, [&](std::size_t i) {
      Tally t;
      const std::string& w = words[i].symbols();
      const OccurrenceCounts& cw = counts.at(w);
      for (const Word& v_word : words) {
        const std::string& v = v_word.symbols();
        if (w.size() + v.size() > static_cast<std::size_t>(max_total)) break;
        const std::string wv = w + v;
        if (!is_admissible(wv, m)) continue;
        ++t.pairs;
        const OccurrenceCounts& cv = counts.at(v);
        const OccurrenceCounts& cwv = counts.at(wv);
        const bool ok0 = cw.n0 + cv.n0 <= cwv.n0 + 1 && cwv.n0 <= cw.n0 + cv.n0;
        const bool ok1 = cw.n1 + cv.n1 <= cwv.n1 + 1 && cwv.n1 <= cw.n1 + cv.n1;
        if (!ok0 || !ok1) ++t.violations;
      }
      return t;
    });
    for (const Tally& t : tallies) {
      pairs += t.pairs;
      violations += t.violations;
    }
  }
  return {violations == 0, "m in {3,4}, |w|+|v| <= " + std::to_string(max_total) + ": " +
                               std::to_string(pairs) + " pairs, " + std::to_string(violations) +
                               " violations"};
}

// Criterion 2.
Outcome counting_bound(int max_length) {
  std::size_t words_checked = 0;
  std::size_t violations = 0;
  for (int m : {3, 4, 5}) {
    for (const Word& w : enumerate_words_up_to(m, max_length)) {
      const OccurrenceCounts c = occurrence_counts(w.symbols(), m);
      const std::size_t len = w.size();
      const auto mm = static_cast<std::size_t>(m);
      ++words_checked;
      if (mm * w.count('0') > (mm - 1) * c.n0 + len || mm * w.count('1') > (mm - 1) * c.n1 + len) {
        ++violations;
      }
    }
  }
  return {violations == 0, "m in {3,4,5}, |w| <= " + std::to_string(max_length) + ": " +
                               std::to_string(words_checked) + " words, " +
                               std::to_string(violations) + " violations"};
}

// Criterion 3.
Outcome closed_vs_recursive(int max_length) {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (int m : {3, 4, 5}) {
    const auto words = enumerate_words_up_to(m, max_length);
    for (const Rational& p : exact_grid()) {
      const BernoulliTypeMeasure<Rational> measure(m, p);
      for (const Word& w : words) {
        ++checked;
        if (measure.mu_closed(w) != measure.mu_recursive(w.symbols())) ++mismatches;
      }
    }
  }
  return {mismatches == 0, "m in {3,4,5}, p in {1/3,1/2,2/3}, |w| <= " +
                               std::to_string(max_length) + ": " + std::to_string(checked) +
                               " exact comparisons, " + std::to_string(mismatches) + " mismatches"};
}

// Criterion 4.
Outcome normalization(int max_length) {
  std::size_t sums = 0;
  std::size_t failures = 0;
  for (int m : {3, 4, 5}) {
    for (const Rational& p : exact_grid()) {
      const BernoulliTypeMeasure<Rational> measure(m, p);
      for (int n = 1; n <= max_length; ++n) {
        Rational total = 0;
        for (const Word& w : enumerate_words(m, n)) total += measure.mu_recursive(w.symbols());
        ++sums;
        if (total != 1) ++failures;
      }
    }
  }
  return {failures == 0, "sum over Lambda_m^n of mu_p for n <= " + std::to_string(max_length) +
                             ": " + std::to_string(sums) + " sums, " + std::to_string(failures) +
                             " not exactly 1"};
}

// Criterion 5.
Outcome quasi_bernoulli(int max_total, unsigned workers) {
  std::size_t violations = 0;
  for (int m : {3, 4, 5}) {
    for (const Rational& p : exact_grid()) {
      violations += quasi_bernoulli_check(BernoulliTypeMeasure<Rational>(m, p), max_total, workers).size();
    }
  }
  return {violations == 0, "m in {3,4,5}, p in {1/3,1/2,2/3}, |w|+|v| <= " +
                               std::to_string(max_total) + ": " + std::to_string(violations) +
                               " violations"};
}

// Criterion 6.
Outcome pullback_bounds(int max_length, std::size_t kmax, unsigned workers) {
  std::size_t violations = 0;
  for (int m : {3, 4, 5}) {
    for (const Rational& p : exact_grid()) {
      violations +=
          pullback_bounds_check(BernoulliTypeMeasure<Rational>(m, p), max_length, kmax, workers).size();
    }
  }
  return {violations == 0, "c = p^-2 (1-p)^-2, |w| <= " + std::to_string(max_length) +
                               ", 1 <= k <= " + std::to_string(kmax) + ": " +
                               std::to_string(violations) + " violations"};
}

// Criterion 7.
Outcome non_invariance() {
  std::size_t cases = 0;
  std::size_t failures = 0;
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {Rational(1, 3), Rational(2, 3)}) {
      const BernoulliTypeMeasure<Rational> measure(m, p);
      const std::string w = std::string(static_cast<std::size_t>(m - 2), '0') + "1";
      const Rational pulled = measure.pullback_cylinder(w, 1);
      const Rational q = 1 - p;
      const Rational expected = power(p, m - 1) + power(p, m - 2) * q * q;
      const Rational mu = measure.mu_recursive(w);
      ++cases;
      if (pulled != expected || pulled == mu || mu != power(p, m - 2) * q) ++failures;
    }
  }
  return {failures == 0, "mu(sigma^-1[0^{m-2}1]) = p^{m-1}+p^{m-2}(1-p)^2 != mu[0^{m-2}1] in " +
                             std::to_string(cases - failures) + "/" + std::to_string(cases) +
                             " cases"};
}

// Criterion 8.
Outcome lambda_triple(std::size_t cesaro_n, unsigned workers) {
  struct Case {
    int m;
    Rational p;
  };
  std::vector<Case> cases;
  for (int m : {3, 4, 5}) {
    for (const Rational& p : {Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(2, 3)}) {
      cases.push_back({m, p});
    }
  }
  struct Result {
    bool stationary_exact = false;
    double cesaro_error = 0.0;
    bool recurrences = false;
  };
  const auto results = parallel_map(cases.size(), workers, [&](std::size_t i) {
    const Case& c = cases[i];
    Result r;
    const Rational closed = lambda0_closed(c.m, c.p);
    const auto chain = build_chain(c.m, c.p);
    r.stationary_exact = digit_mass(stationary(chain), c.m, 0) == closed;
    const BernoulliTypeMeasure<double> real_measure(c.m, c.p.get_d());
    r.cesaro_error = std::abs(real_measure.cesaro_lambda("0", cesaro_n) - closed.get_d());
    try {
      pullback_series(BernoulliTypeMeasure<Rational>(c.m, c.p), 20);
      r.recurrences = true;
    } catch (const RecurrenceMismatch&) {
      r.recurrences = false;
    }
    return r;
  });
  std::size_t exact_ok = 0;
  std::size_t rec_ok = 0;
  double worst = 0.0;
  for (const Result& r : results) {
    exact_ok += r.stationary_exact ? 1 : 0;
    rec_ok += r.recurrences ? 1 : 0;
    worst = std::max(worst, r.cesaro_error);
  }
  const bool passed = exact_ok == cases.size() && rec_ok == cases.size() && worst <= 1e-3;
  return {passed, "stationary == closed form " + std::to_string(exact_ok) + "/" +
                      std::to_string(cases.size()) + "; max |cesaro(n=" + std::to_string(cesaro_n) +
                      ") - closed| = " + scientific(worst) + " (tol 1e-3); recurrences k<=20 " +
                      std::to_string(rec_ok) + "/" + std::to_string(cases.size())};
}

// Criterion 9.
Outcome g_bound() {
  constexpr int points = 10000;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max m |g_m(x)|
  for (int m = 3; m <= 20; ++m) {
    for (int i = 1; i <= points; ++i) {
      const double x = static_cast<double>(i) / (points + 1);
      const double scaled = static_cast<double>(m) * std::abs(g_m(m, x));
      worst_ratio = std::max(worst_ratio, scaled);
      if (scaled > 1.0) ++violations;
    }
  }
  return {violations == 0, "10^4-point grid, m = 3..20: max m|g_m| = " + fixed(worst_ratio, 9) +
                               ", " + std::to_string(violations) + " violations"};
}

// f_3(x) = (1+x)/3 as a polynomial identity: 3(x - x^3) and
// (1+x)(1 - x^3 - (1-x)^3) have degree <= 4, so agreement at 5 points suffices.
bool m3_identity_holds() {
  for (int i = 1; i <= 5; ++i) {
    const Rational x(i, 7);
    const Rational lhs = 3 * (x - x * x * x);
    const Rational y = 1 - x;
    const Rational rhs = (1 + x) * (1 - x * x * x - y * y * y);
    if (lhs != rhs) return false;
  }
  return true;
}

// Criterion 10.
Outcome root_quality() {
  std::size_t solved = 0;
  std::size_t failures = 0;
  double worst_residual = 0.0;
  for (int m = 3; m <= 50; ++m) {
    for (double p : {0.3, 0.4, 0.6}) {
      const double inv_m = 1.0 / m;
      if (!(p > inv_m && p < 1.0 - inv_m)) continue;
      const double q = solve_qm(m, p);
      const double residual = std::abs(f_m(m, q) - p);
      worst_residual = std::max(worst_residual, residual);
      ++solved;
      if (residual > 1e-12 || std::abs(q - p) > inv_m) ++failures;
    }
  }
  const double q3 = solve_qm(3, 0.4);
  const bool identity = m3_identity_holds();
  const bool q3_ok = std::abs(q3 - 0.2) <= 1e-12;
  return {failures == 0 && q3_ok && identity,
          std::to_string(solved) + " roots, max |f_m(q)-p| = " + scientific(worst_residual) +
              ", " + std::to_string(failures) + " failures; q(3,0.4) = " + fixed(q3, 15) +
              "; f_3 = (1+x)/3 identity " + (identity ? "holds" : "FAILS")};
}

// Criterion 11.
Outcome entropy_convergence() {
  const double h = entropy_binary(0.3);
  std::vector<double> bounds;
  for (int m : {10, 20, 50, 100}) bounds.push_back(lower_bound(m, 0.3, solve_qm(m, 0.3)));
  bool monotone = true;
  for (std::size_t i = 1; i < bounds.size(); ++i) monotone &= bounds[i] >= bounds[i - 1] - 1e-12;
  const double gap = h - bounds.back();
  const bool close = std::abs(gap) <= 0.05;
  const bool below = std::all_of(bounds.begin(), bounds.end(), [&](double b) { return b <= h + 1e-12; });
  return {monotone && close && below,
          "h(0.3) = " + fixed(h, 6) + "; bound(m=10,20,50,100) = " + fixed(bounds[0]) + ", " +
              fixed(bounds[1]) + ", " + fixed(bounds[2]) + ", " + fixed(bounds[3]) +
              "; gap at m=100 = " + fixed(gap) + " (tol 0.05)" + (monotone ? "" : "; NOT monotone")};
}

// Criteria 12 and 13 share one sample.
std::pair<Outcome, Outcome> ergodic_sample(std::uint64_t seed) {
  constexpr std::size_t n = 1000000;
  const double q = solve_qm(3, 0.4);
  const SampleRun run = sample(build_chain(3, q), n, seed);
  const double freq = run.frequency0(n);
  const double band = 3.0 * batch_means_sigma(run) / std::sqrt(static_cast<double>(n));
  Outcome freq_outcome{std::abs(freq - 0.4) <= 0.002,
                       "m=3, q=" + fixed(q, 12) + ", n=10^6, seed=" + std::to_string(seed) +
                           ": freq0 = " + fixed(freq) + " (target 0.4 +- 0.002; batch-means 3 sigma = " +
                           fixed(band) + ")"};
  const double local = empirical_local_dimension(run, q).back();
  const double bound = lower_bound(3, 0.4, q);
  Outcome local_outcome{local >= bound - 0.01, "-log mu_q[w|n]/(n log 2) at n=10^6 = " + fixed(local) +
                                                   " >= lower_bound(3,0.4,0.2) - 0.01 = " +
                                                   fixed(bound - 0.01)};
  return {freq_outcome, local_outcome};
}

// Criterion 14.
Outcome gamma_construction(std::uint64_t seed, std::size_t samples, std::size_t length,
                           std::size_t depth, unsigned workers) {
  constexpr int m = 3;
  const double q = solve_qm(m, 0.4);
  const auto chain = build_chain(m, q);
  struct Check {
    bool clean = false;
    bool blocks_ok = false;
  };
  const auto checks = parallel_map(samples, workers, [&](std::size_t i) {
    const SampleRun run = sample(chain, length, seed, i + 1);
    const SequenceWindow window = theta_embed(Word(run.word, m));
    Check c;
    c.clean = gamma_check_prefix(window, depth).status == GammaStatus::clean_to_depth;
    c.blocks_ok = forbidden_aligned_blocks(window.prefix, m, 2).empty();
    return c;
  });
  const auto clean = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.clean; });
  const auto blocks = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.blocks_ok; });

  // Every Gamma-clean window of length 16 other than 1^16 keeps all runs
  // within its leading run of ones a, i.e. lies in Lambda_{a+1}.
  constexpr std::size_t width = 16;
  std::size_t clean_windows = 0;
  std::size_t run_failures = 0;
  for (std::uint32_t bits = 0; bits < (1U << width); ++bits) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
      if (bits & (1U << (width - 1 - i))) s[i] = '1';
    }
    const SequenceWindow window{s, true};
    if (gamma_check_prefix(window, width - 1).status != GammaStatus::clean_to_depth) continue;
    ++clean_windows;
    const std::size_t lead = s.find('0') == std::string::npos ? width : s.find('0');
    const std::size_t longest = longest_run(s);
    const bool bounded = lead == width || (s.front() == '1' && longest <= lead);
    if (!bounded) ++run_failures;
  }
  const bool passed = static_cast<std::size_t>(clean) == samples &&
                      static_cast<std::size_t>(blocks) == samples && run_failures == 0;
  return {passed, std::to_string(clean) + "/" + std::to_string(samples) +
                      " samples 1^6 u clean to depth " + std::to_string(depth) + ", " +
                      std::to_string(blocks) + "/" + std::to_string(samples) +
                      " with admissible aligned blocks; " + std::to_string(clean_windows) +
                      " clean windows of length 16, " + std::to_string(run_failures) +
                      " with a run longer than the leading run"};
}

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, std::string name, double limit_seconds,
                      const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome = body();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  CriterionResult result{id, std::move(name), outcome.passed, std::move(outcome.detail), seconds};
  if (limit_seconds > 0.0 && seconds > limit_seconds) {
    result.passed = false;
    result.detail += "; exceeded time limit of " + std::to_string(static_cast<int>(limit_seconds)) + " s";
  }
  return result;
}

std::vector<CriterionResult> run_core(const VerifyOptions& options) {
  const bool quick = options.quick;
  const unsigned workers = options.workers;
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "occurrence subadditivity", 60, [&] {
    return occurrence_subadditivity(quick ? 9 : 12, workers);
  }));
  out.push_back(timed(2, "counting bound", 60, [&] { return counting_bound(quick ? 10 : 14); }));
  out.push_back(timed(3, "closed form equals recursion", 0, [&] { return closed_vs_recursive(quick ? 8 : 12); }));
  out.push_back(timed(4, "normalization", 0, [&] { return normalization(quick ? 8 : 12); }));
  out.push_back(timed(5, "quasi-Bernoulli", 0, [&] { return quasi_bernoulli(quick ? 7 : 10, workers); }));
  out.push_back(timed(6, "pullback bounds", 0, [&] {
    return pullback_bounds(quick ? 6 : 8, quick ? 6 : 8, workers);
  }));
  out.push_back(timed(7, "non-invariance witness", 0, [] { return non_invariance(); }));
  out.push_back(timed(8, "lambda_p[0] triple agreement", 60, [&] {
    return lambda_triple(10000, workers);
  }));
  out.push_back(timed(9, "|g_m| <= 1/m", 0, [] { return g_bound(); }));
  out.push_back(timed(10, "root quality", 0, [] { return root_quality(); }));
  out.push_back(timed(11, "entropy convergence", 0, [] { return entropy_convergence(); }));
  Outcome local;
  out.push_back(timed(12, "ergodic frequency", 10, [&] {
    auto [freq, loc] = ergodic_sample(options.seed);
    local = loc;
    return freq;
  }));
  out.push_back(timed(13, "local dimension", 0, [&] { return local; }));
  out.push_back(timed(14, "Gamma construction", 0, [&] {
    return gamma_construction(options.seed, quick ? 20 : 100, 10000, 1000, workers);
  }));
  return out;
}

std::string lines(const std::vector<CriterionResult>& criteria) {
  std::string text;
  for (const auto& c : criteria) {
    text += std::string(c.passed ? "[PASS]" : "[FAIL]") + " C" + (c.id < 10 ? "0" : "") +
            std::to_string(c.id) + " " + c.name + ": " + c.detail + "\n";
  }
  return text;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed; });
}

std::string VerifyReport::text(bool quick) const {
  std::size_t passed = 0;
  for (const auto& c : criteria) passed += c.passed ? 1 : 0;
  return "rllshift verify (schema 1, " + std::string(quick ? "quick" : "full") + ")\n" +
         lines(criteria) + "summary: " + std::to_string(passed) + "/" +
         std::to_string(criteria.size()) + " passed\n";
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.criteria = run_core(options);
  if (options.check_determinism) {
    report.criteria.push_back(timed(15, "determinism", 0, [&] {
      VerifyOptions other = options;
      other.workers = options.workers == 1 ? 4 : 1;
      const std::string first = lines(report.criteria);
      const std::string second = lines(run_core(other));
      const bool same = first == second;
      return Outcome{same, std::string("criteria 1-14 re-run with a different worker count: reports ") +
                               (same ? "byte-identical" : "DIFFER")};
    }));
  }
  return report;
}

}  // namespace rll
