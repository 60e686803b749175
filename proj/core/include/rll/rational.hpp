#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace rll {

using Rational = mpq_class;

/// Arithmetic mode of a computation: exact rationals or binary64.
enum class Mode { exact, real };

std::string_view to_string(Mode mode);

template <class Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational>;

template <class Scalar>
constexpr Mode mode_of() {
  return is_exact_v<Scalar> ? Mode::exact : Mode::real;
}

/// Parses "num/den" or an integer into a canonical rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print as "n/1".
std::string format_rational(const Rational& value);

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_double(double value);

/// A probability given on the command line or in a config: either an exact
/// "num/den" or a decimal that was read as binary64.
struct ProbabilityInput {
  Rational exact;
  double approx = 0.0;
  bool is_exact = true;
};

ProbabilityInput parse_probability(std::string_view text);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

template <class Scalar>
Scalar from_rational(const Rational& value) {
  if constexpr (is_exact_v<Scalar>) {
    return value;
  } else {
    return value.get_d();
  }
}

template <class Scalar>
Scalar power(const Scalar& base, unsigned exponent) {
  Scalar result = 1;
  Scalar factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

}  // namespace rll
