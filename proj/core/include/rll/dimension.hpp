#pragma once

#include <optional>
#include <stdexcept>

namespace rll {

/// p outside the range where the frequency root is guaranteed to exist.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bracketing failed; indicates a bug since f_m spans (1/m, 1-1/m).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// f_m(x) = (x - x^m) / (1 - x^m - (1-x)^m): the invariant frequency of
/// zeros under the Bernoulli-type measure with parameter x.
double f_m(int m, double x);

/// g_m(x) = (x^m (1-x) - x (1-x)^m) / (1 - x^m - (1-x)^m) = x - f_m(x).
double g_m(int m, double x);

/// 1 - x^m - (1-x)^m without cancellation for small x or 1-x.
double run_denominator(int m, double x);

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kRootBracketEpsilon = 1e-9;

/// Root q of f_m(q) = p by bisection on [1e-9, 1 - 1e-9], carried to full
/// double precision. Requires 1/m < p < 1 - 1/m.
double solve_qm(int m, double p, double tol = kDefaultRootTolerance);

/// (-(mp-1) log q - (m-mp-1) log(1-q)) / ((m-1) log 2).
double lower_bound(int m, double p, double q);

/// Binary entropy in bits with 0 log 0 = 0.
double entropy_binary(double p);

/// log2 of the growth rate of |Lambda_m^n|: the root in [1,2] of
/// x^{m-1} = x^{m-2} + ... + x + 1.
double topo_growth_rate(int m);
double topo_dim(int m);

struct DimensionProfile {
  int m = 3;
  double p = 0.5;
  std::optional<double> q;            // present iff 1/m < p < 1 - 1/m
  std::optional<double> lower_bound;  // likewise
  double entropy = 0.0;
  double topo_dim = 0.0;
};

DimensionProfile profile(int m, double p, double tol = kDefaultRootTolerance);

}  // namespace rll
