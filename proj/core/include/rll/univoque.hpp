#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rll/words.hpp"

namespace rll {

/// preperiod followed by period repeated forever.
class EventuallyPeriodicSequence {
 public:
  /// Throws std::invalid_argument for an empty period or non-binary input.
  EventuallyPeriodicSequence(std::string preperiod, std::string period);

  const std::string& preperiod() const noexcept { return preperiod_; }
  const std::string& period() const noexcept { return period_; }

  /// Symbol at 0-based index i.
  char at(std::size_t i) const;
  /// First n symbols.
  std::string prefix(std::size_t n) const;

  /// Minimal period, then minimal preperiod.
  EventuallyPeriodicSequence canonical() const;

  bool operator==(const EventuallyPeriodicSequence&) const = default;

 private:
  std::string preperiod_;
  std::string period_;
};

/// Parses "bits" (purely periodic) or "preperiod:period".
EventuallyPeriodicSequence parse_periodic(std::string_view text);

enum class GammaStatus { violated, clean_to_depth, exact_member, exact_nonmember };
enum class GammaVariant { strict, weak };

std::string_view to_string(GammaStatus status);

/// Which side of  complement(w) < sigma^k w < w  failed.
enum class GammaBound { upper, lower };

/// Failure at shift k. position is the 1-based index in sigma^k w of the first
/// differing symbol, or 0 when the two sequences are equal (only reported by
/// the exact checker, where equality breaks strictness).
struct GammaWitness {
  std::size_t k = 0;
  std::size_t position = 0;
  GammaBound bound = GammaBound::upper;

  bool operator==(const GammaWitness&) const = default;
};

struct GammaVerdict {
  GammaStatus status = GammaStatus::clean_to_depth;
  std::optional<GammaWitness> witness;
  /// Shifts whose comparison stayed equal over the whole visible overlap.
  std::vector<std::size_t> equality_flags;
};

/// Checks complement(w) < sigma^k w < w for k = 1..depth on the visible
/// window; reports `violated` with the smallest-k witness, never membership.
/// Requires 1 <= depth <= |w| - 1.
GammaVerdict gamma_check_prefix(const SequenceWindow& w, std::size_t depth);

/// Re-checks a witness by direct comparison on the window.
bool witness_holds(const SequenceWindow& w, const GammaWitness& witness);

/// Exact decision for eventually periodic sequences. Strict: for all k >= 1,
/// complement(w) < sigma^k w < w. Weak: for all k >= 0 with <=.
GammaVerdict gamma_check_periodic(const EventuallyPeriodicSequence& s, GammaVariant variant);

/// The window 1^{2m} u. Throws std::invalid_argument if u is inadmissible.
SequenceWindow theta_embed(const Word& u);

/// Aligned blocks w_{km+1..km+m}, k >= first_block, that equal 0^m or 1^m
/// (block indices, 0-based).
std::vector<std::size_t> forbidden_aligned_blocks(std::string_view w, int m,
                                                  std::size_t first_block);

struct FrequencyProfile {
  std::size_t n = 0;
  std::vector<double> ratio_series;  // ratio_series[k-1] = |w_1..w_k|_0 / k
  double liminf_est = 0.0;
  double limsup_est = 0.0;
};

/// Prefix ratios with liminf/limsup estimated over the final tail_window
/// prefixes; tail_window = 0 selects the last 10%.
FrequencyProfile frequency_profile(const SequenceWindow& w, std::size_t tail_window = 0);

}  // namespace rll
