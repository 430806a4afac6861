#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcix/matrix.hpp"

namespace pcix {

struct EigenResult {
  double lambda_max = 0.0;
  std::vector<double> w;  // Perron vector, sum 1
  std::size_t iterations = 0;
  double residual = 0.0;  // max_i |(Mw)_i - lambda w_i| / w_i
};

struct PowerOptions {
  double tol = 1e-12;
  std::size_t max_iter = 100000;
};

/// Perron pair of a positive matrix by sum-normalized power iteration, started
/// from the geometric-mean vector. Stops when both the eigenvalue change and the
/// componentwise residual fall to tol * lambda. Throws ConvergenceError otherwise.
EigenResult power_iteration(const PCMatrix& m, const PowerOptions& opts = {});

/// Mean CI of random reciprocal matrices, keyed by order n.
class RITable {
 public:
  RITable() = default;
  explicit RITable(std::map<int, double> values);

  /// {3: 0.5245, 4: 0.882, 5: 1.109, 6: 1.252, 7: 1.341}
  static RITable defaults();
  /// Alternate RI value for n = 3.
  static constexpr double kAlternateN3 = 0.52;

  bool contains(int n) const { return values_.count(n) != 0; }
  /// Throws ValidationError when n has no entry.
  double at(int n) const;
  /// Entry for n, or the entry of the largest tabulated order below n. RI grows
  /// with n, so this never understates CR.
  double at_or_below(int n) const;
  RITable with(int n, double ri) const;
  const std::map<int, double>& values() const { return values_; }

 private:
  std::map<int, double> values_;
};

double saaty_ci(double lambda_max, std::size_t n);
/// CI / RI(n). Throws ValidationError when RI(n) is missing.
double saaty_cr(double ci, std::size_t n, const RITable& ri);

/// All ones except a_1n = x and a_n1 = 1/x.
PCMatrix cpc(double x, std::size_t n);
/// a_ij = x above the diagonal, 1/x below.
PCMatrix fpc(double x, std::size_t n);

/// Largest real root of l^3 - n l^2 = (n-2)(1/x + x - 2), by bracketed bisection.
double cpc_lambda_max(double x, std::size_t n);
/// ((x-1)/x) (x + x^(2/n)) / (x^(2/n) - 1); n at x = 1.
double fpc_lambda_max(double x, std::size_t n);

struct CpcBounds {
  double lhs = 0.0;     // (lambda - n) / (n - 1)
  double bound2 = 0.0;  // ((n-2)/(n-1)) (1/x + x - 2) / n^2
  double bound3 = 0.0;  // x / n^2
};
/// Requires x > 1.
CpcBounds cpc_bound_check(double x, std::size_t n);

/// n + ii^2 / (3n cbrt(1 - ii)) with ii = kii(M).
double theorem1_bound(const PCMatrix& m);
/// n + sum over all triads of ii^2 / cbrt(1 - ii), divided by 3n(n-2).
double theorem2_bound(const PCMatrix& m);

enum class Family { CPC, FPC };
std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

PCMatrix generate(Family f, double x, std::size_t n);
double family_lambda_max(Family f, double x, std::size_t n);

/// CR of the family member at x, via the closed-form eigenvalue.
double family_cr(Family f, double x, std::size_t n, const RITable& ri);

/// The x > 1 at which the family's CR reaches `cr_threshold`, by bisection.
double max_acceptable_x(Family f, std::size_t n, double cr_threshold, const RITable& ri);

/// Error of judging 1 as x, read as the ratio itself: x * 100 percent.
inline double ratio_error(double x) { return 100.0 * x; }
/// 1 - 1/x: the relative error of judging 1 as x.
double delta_error(double x);

/// Small-sample RI estimate: mean CI of seeded reciprocal matrices whose upper
/// entries are drawn uniformly from the scale {1/9, ..., 1/2, 1, 2, ..., 9}.
/// For sanity checks only.
double estimate_random_index(std::size_t n, std::size_t samples, std::uint64_t seed);

}  // namespace pcix
