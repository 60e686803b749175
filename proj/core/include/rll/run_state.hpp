#pragma once

#include <cstddef>
#include <string>

#include "rll/words.hpp"

namespace rll {

/// (last digit, length of the current run), run in [1, m-1].
struct RunState {
  int digit = 0;
  int run = 1;

  bool operator==(const RunState&) const = default;
};

inline std::size_t state_count(int m) { return 2 * static_cast<std::size_t>(m - 1); }

inline std::size_t state_index(RunState s, int m) {
  return static_cast<std::size_t>(s.digit) * static_cast<std::size_t>(m - 1) +
         static_cast<std::size_t>(s.run - 1);
}

inline RunState state_at(std::size_t index, int m) {
  const auto width = static_cast<std::size_t>(m - 1);
  return RunState{static_cast<int>(index / width), static_cast<int>(index % width) + 1};
}

inline std::string to_string(RunState s) {
  return "(" + std::to_string(s.digit) + "," + std::to_string(s.run) + ")";
}

/// Outcome of appending one digit to a word whose run state is known.
enum class Branch { forbidden, free, forced };

/// Appending `next` after state `s` in Lambda_m: repeating the digit is only
/// allowed while the run is below m-1; the other digit is always allowed, and
/// is forced when the run has reached m-1.
inline Branch classify_step(RunState s, int next, int m) {
  if (next == s.digit) return s.run < m - 1 ? Branch::free : Branch::forbidden;
  return s.run < m - 1 ? Branch::free : Branch::forced;
}

inline RunState advance(RunState s, int next) {
  return next == s.digit ? RunState{s.digit, s.run + 1} : RunState{next, 1};
}

}  // namespace rll
