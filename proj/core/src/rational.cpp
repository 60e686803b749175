#include "rll/rational.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <string>

namespace rll {

std::string_view to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "float";
}

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

ProbabilityInput parse_probability(std::string_view text) {
  ProbabilityInput out;
  if (text.find('/') != std::string_view::npos || is_integer_text(text)) {
    out.exact = parse_rational(text);
    out.approx = out.exact.get_d();
    out.is_exact = true;
    return out;
  }
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed probability: '" + std::string(text) + "'");
  }
  out.approx = value;
  out.exact = Rational(value);
  out.is_exact = false;
  return out;
}

}  // namespace rll
