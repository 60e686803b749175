#include "rll/univoque.hpp"

#include <algorithm>
#include <stdexcept>

namespace rll {

EventuallyPeriodicSequence::EventuallyPeriodicSequence(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be non-empty");
  if (!is_binary(preperiod_) || !is_binary(period_)) {
    throw std::invalid_argument("sequence must consist of '0' and '1' only");
  }
}

char EventuallyPeriodicSequence::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::string EventuallyPeriodicSequence::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

EventuallyPeriodicSequence EventuallyPeriodicSequence::canonical() const {
  std::string period = period_;
  for (std::size_t d = 1; d <= period.size(); ++d) {
    if (period.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < period.size() && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  std::string preperiod = preperiod_;
  // Absorb the preperiod tail into the cycle while it matches.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return EventuallyPeriodicSequence(std::move(preperiod), std::move(period));
}

EventuallyPeriodicSequence parse_periodic(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return EventuallyPeriodicSequence("", std::string(text));
  return EventuallyPeriodicSequence(std::string(text.substr(0, colon)),
                                    std::string(text.substr(colon + 1)));
}

std::string_view to_string(GammaStatus status) {
  switch (status) {
    case GammaStatus::violated: return "violated";
    case GammaStatus::clean_to_depth: return "clean-to-depth";
    case GammaStatus::exact_member: return "exact-member";
    case GammaStatus::exact_nonmember: return "exact-nonmember";
  }
  return "?";
}

namespace {

struct Comparison {
  std::size_t position = 0;  // 1-based first difference, 0 if none
  bool shifted_smaller = false;
};

// Compares sigma^k of `source` against `reference` over `length` symbols.
template <class Source, class Reference>
Comparison compare_shift(const Source& source, const Reference& reference, std::size_t k,
                         std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) {
    const char shifted = source(k + i);
    const char other = reference(i);
    if (shifted != other) return Comparison{i + 1, shifted < other};
  }
  return Comparison{};
}

char flip(char c) { return c == '0' ? '1' : '0'; }

}  // namespace

GammaVerdict gamma_check_prefix(const SequenceWindow& w, std::size_t depth) {
  const std::size_t n = w.size();
  if (depth == 0 || depth + 1 > n) {
    throw std::invalid_argument("gamma_check_prefix requires 1 <= depth <= |w| - 1");
  }
  const std::string& s = w.prefix;
  auto source = [&](std::size_t i) { return s[i]; };
  auto negated = [&](std::size_t i) { return flip(s[i]); };

  GammaVerdict verdict;
  for (std::size_t k = 1; k <= depth; ++k) {
    const std::size_t overlap = n - k;
    const Comparison upper = compare_shift(source, source, k, overlap);
    const Comparison lower = compare_shift(source, negated, k, overlap);
    std::optional<GammaWitness> found;
    if (upper.position != 0 && !upper.shifted_smaller) {
      found = GammaWitness{k, upper.position, GammaBound::upper};
    }
    if (lower.position != 0 && lower.shifted_smaller &&
        (!found || lower.position < found->position)) {
      found = GammaWitness{k, lower.position, GammaBound::lower};
    }
    if (found) {
      verdict.status = GammaStatus::violated;
      verdict.witness = found;
      return verdict;
    }
    if (upper.position == 0 || lower.position == 0) verdict.equality_flags.push_back(k);
  }
  verdict.status = GammaStatus::clean_to_depth;
  return verdict;
}

bool witness_holds(const SequenceWindow& w, const GammaWitness& witness) {
  const std::string& s = w.prefix;
  if (witness.k == 0 || witness.position == 0) return false;
  const std::size_t shifted_index = witness.k + witness.position - 1;
  const std::size_t reference_index = witness.position - 1;
  if (shifted_index >= s.size()) return false;
  for (std::size_t i = 0; i < reference_index; ++i) {
    const char reference = witness.bound == GammaBound::upper ? s[i] : flip(s[i]);
    if (s[witness.k + i] != reference) return false;
  }
  const char shifted = s[shifted_index];
  const char reference =
      witness.bound == GammaBound::upper ? s[reference_index] : flip(s[reference_index]);
  return witness.bound == GammaBound::upper ? shifted > reference : shifted < reference;
}

GammaVerdict gamma_check_periodic(const EventuallyPeriodicSequence& input, GammaVariant variant) {
  const EventuallyPeriodicSequence s = input.canonical();
  const std::size_t pre = s.preperiod().size();
  const std::size_t per = s.period().size();
  // sigma^k w and its comparands all have preperiod <= pre and period per, so
  // agreement on pre + 2 per symbols means equality, and every shift k >= 1
  // coincides with one of k = 1..pre+per.
  const std::size_t length = pre + 2 * per;
  const std::size_t first = variant == GammaVariant::strict ? 1 : 0;
  auto source = [&](std::size_t i) { return s.at(i); };
  auto negated = [&](std::size_t i) { return flip(s.at(i)); };

  GammaVerdict verdict;
  verdict.status = GammaStatus::exact_member;
  for (std::size_t k = first; k <= pre + per; ++k) {
    const Comparison upper = compare_shift(source, source, k, length);
    const Comparison lower = compare_shift(source, negated, k, length);
    std::optional<GammaWitness> found;
    if (upper.position != 0 && !upper.shifted_smaller) {
      found = GammaWitness{k, upper.position, GammaBound::upper};
    } else if (upper.position == 0 && variant == GammaVariant::strict) {
      found = GammaWitness{k, 0, GammaBound::upper};
    }
    if (lower.position != 0 && lower.shifted_smaller) {
      if (!found || found->position == 0 || lower.position < found->position) {
        found = GammaWitness{k, lower.position, GammaBound::lower};
      }
    } else if (lower.position == 0 && variant == GammaVariant::strict && !found) {
      found = GammaWitness{k, 0, GammaBound::lower};
    }
    if (upper.position == 0 || lower.position == 0) verdict.equality_flags.push_back(k);
    if (found) {
      verdict.status = GammaStatus::exact_nonmember;
      verdict.witness = found;
      return verdict;
    }
  }
  return verdict;
}

SequenceWindow theta_embed(const Word& u) {
  if (!is_admissible(u)) {
    throw std::invalid_argument("theta_embed requires an admissible word");
  }
  std::string prefix(2 * static_cast<std::size_t>(u.order()), '1');
  prefix += u.symbols();
  return SequenceWindow{std::move(prefix), true};
}

std::vector<std::size_t> forbidden_aligned_blocks(std::string_view w, int m,
                                                  std::size_t first_block) {
  checked_order(m);
  const auto width = static_cast<std::size_t>(m);
  std::vector<std::size_t> bad;
  for (std::size_t k = first_block; (k + 1) * width <= w.size(); ++k) {
    const std::string_view block = w.substr(k * width, width);
    if (block.find_first_not_of(block.front()) == std::string_view::npos) bad.push_back(k);
  }
  return bad;
}

FrequencyProfile frequency_profile(const SequenceWindow& w, std::size_t tail_window) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("frequency_profile requires a non-empty window");
  if (tail_window == 0) tail_window = std::max<std::size_t>(1, n / 10);
  if (tail_window > n) throw std::invalid_argument("tail window exceeds the window length");
  FrequencyProfile out;
  out.n = n;
  out.ratio_series.reserve(n);
  std::size_t zeros = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (w.prefix[k] == '0') ++zeros;
    out.ratio_series.push_back(static_cast<double>(zeros) / static_cast<double>(k + 1));
  }
  const auto tail_begin = out.ratio_series.end() - static_cast<std::ptrdiff_t>(tail_window);
  const auto [lo, hi] = std::minmax_element(tail_begin, out.ratio_series.end());
  out.liminf_est = *lo;
  out.limsup_est = *hi;
  return out;
}

}  // namespace rll
