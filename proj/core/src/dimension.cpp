#include "rll/dimension.hpp"

#include <cmath>
#include <string>

#include "rll/words.hpp"

namespace rll {

namespace {

void require_open_unit(double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("argument must lie in (0,1)");
}

// 1 - (1-y)^m - y^m for y <= 1/2.
double denominator_small(int m, double y) {
  return -std::expm1(static_cast<double>(m) * std::log1p(-y)) - std::pow(y, m);
}

}  // namespace

double run_denominator(int m, double x) {
  checked_order(m);
  require_open_unit(x);
  return denominator_small(m, x <= 0.5 ? x : 1.0 - x);
}

double f_m(int m, double x) {
  checked_order(m);
  require_open_unit(x);
  // f_m(x) + f_m(1-x) = 1; evaluate on the half where x^m is negligible.
  if (x > 0.5) return 1.0 - f_m(m, 1.0 - x);
  return (x - std::pow(x, m)) / denominator_small(m, x);
}

double g_m(int m, double x) {
  checked_order(m);
  require_open_unit(x);
  const double y = 1.0 - x;
  return (std::pow(x, m) * y - x * std::pow(y, m)) / run_denominator(m, x);
}

double solve_qm(int m, double p, double tol) {
  checked_order(m);
  const double inv_m = 1.0 / static_cast<double>(m);
  if (!(p > inv_m && p < 1.0 - inv_m)) {
    throw DomainError("solve_qm requires 1/m < p < 1-1/m (m = " + std::to_string(m) +
                      ", p = " + std::to_string(p) + ")");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  double lo = kRootBracketEpsilon;
  double hi = 1.0 - kRootBracketEpsilon;
  double f_lo = f_m(m, lo) - p;
  const double f_hi = f_m(m, hi) - p;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) throw NumericError("no sign change of f_m - p on the bracket");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f_m(m, mid) - p;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(f_m(m, lo) - p);
  const double r_hi = std::abs(f_m(m, hi) - p);
  const double root = r_lo <= r_hi ? lo : hi;
  if (std::min(r_lo, r_hi) > tol) throw NumericError("bisection did not reach the requested tolerance");
  return root;
}

double lower_bound(int m, double p, double q) {
  checked_order(m);
  require_open_unit(q);
  const double md = static_cast<double>(m);
  return (-(md * p - 1.0) * std::log(q) - (md - md * p - 1.0) * std::log1p(-q)) /
         ((md - 1.0) * std::log(2.0));
}

double entropy_binary(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("entropy_binary requires p in [0,1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  return (term(p) + term(1.0 - p)) / std::log(2.0);
}

double topo_growth_rate(int m) {
  checked_order(m);
  // x^{m-1} - (x^{m-2} + ... + 1) is negative at 1 and positive at 2.
  auto residual = [m](double x) {
    double lower = 0.0;
    double term = 1.0;
    for (int j = 0; j < m - 1; ++j) {
      lower += term;
      term *= x;
    }
    return term - lower;
  };
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double topo_dim(int m) { return std::log(topo_growth_rate(m)) / std::log(2.0); }

DimensionProfile profile(int m, double p, double tol) {
  checked_order(m);
  DimensionProfile out;
  out.m = m;
  out.p = p;
  out.entropy = entropy_binary(p);
  out.topo_dim = topo_dim(m);
  const double inv_m = 1.0 / static_cast<double>(m);
  if (p > inv_m && p < 1.0 - inv_m) {
    out.q = solve_qm(m, p, tol);
    out.lower_bound = lower_bound(m, p, *out.q);
  }
  return out;
}

}  // namespace rll
