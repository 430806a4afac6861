#include "pcix/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pcix/error.hpp"
#include "pcix/indicators.hpp"
#include "pcix/sampling.hpp"

namespace pcix {
namespace {

void check_family_args(double x, std::size_t n) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ValidationError("x must be positive and finite");
  if (n < 3) throw ValidationError("family matrices require n >= 3");
}

double bound_term(double ii) { return ii * ii / std::cbrt(1.0 - ii); }

}  // namespace

EigenResult power_iteration(const PCMatrix& m, const PowerOptions& opts) {
  if (!(opts.tol > 0.0)) throw ValidationError("power iteration tolerance must be positive");
  if (opts.max_iter < 1) throw ValidationError("max_iter must be at least 1");

  const std::size_t n = m.size();
  std::vector<double> w = geometric_mean_weights(m).values();
  std::vector<double> y(n);
  double prev_lambda = 0.0;
  EigenResult r;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * w[j];
      y[i] = acc;
    }
    // w sums to 1, so the sum of Mw is the eigenvalue estimate.
    const double lambda = std::accumulate(y.begin(), y.end(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      residual = std::max(residual, std::abs(y[i] - lambda * w[i]) / w[i]);

    r = {lambda, w, it, residual};
    const bool settled = it == 1 || std::abs(lambda - prev_lambda) <= opts.tol * lambda;
    if (settled && residual <= opts.tol * lambda) return r;

    prev_lambda = lambda;
    for (std::size_t i = 0; i < n; ++i) w[i] = y[i] / lambda;
  }
  std::ostringstream os;
  os << "power iteration did not converge in " << opts.max_iter
     << " iterations (residual " << r.residual << ")";
  throw ConvergenceError(os.str(), r.residual);
}

RITable::RITable(std::map<int, double> values) : values_(std::move(values)) {
  for (const auto& [n, ri] : values_)
    if (n < 3 || !(ri > 0.0) || !std::isfinite(ri))
      throw ValidationError("RI table entries need n >= 3 and a positive value");
}

RITable RITable::defaults() {
  return RITable({{3, 0.5245}, {4, 0.882}, {5, 1.109}, {6, 1.252}, {7, 1.341}});
}

double RITable::at(int n) const {
  const auto it = values_.find(n);
  if (it == values_.end())
    throw ValidationError("no random index for n = " + std::to_string(n));
  return it->second;
}

double RITable::at_or_below(int n) const {
  auto it = values_.upper_bound(n);
  if (it == values_.begin())
    throw ValidationError("no random index at or below n = " + std::to_string(n));
  return std::prev(it)->second;
}

RITable RITable::with(int n, double ri) const {
  auto copy = values_;
  copy[n] = ri;
  return RITable(std::move(copy));
}

double saaty_ci(double lambda_max, std::size_t n) {
  if (n < 2) throw ValidationError("CI requires n >= 2");
  return (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
}

double saaty_cr(double ci, std::size_t n, const RITable& ri) {
  return ci / ri.at(static_cast<int>(n));
}

PCMatrix cpc(double x, std::size_t n) {
  check_family_args(x, n);
  PCMatrix m(n);
  m.set(0, n - 1, x);
  return m;
}

PCMatrix fpc(double x, std::size_t n) {
  check_family_args(x, n);
  PCMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, x);
  return m;
}

double cpc_lambda_max(double x, std::size_t n) {
  check_family_args(x, n);
  const double nd = static_cast<double>(n);
  const double c = (nd - 2.0) * (1.0 / x + x - 2.0);
  if (c <= 0.0) return nd;

  // f is increasing past 2n/3, f(n) = -c < 0, so the root above n is unique.
  auto f = [&](double l) { return l * l * (l - nd) - c; };
  double lo = nd;
  double hi = nd + c * (nd - 1.0) / (nd * nd) + 1.0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi = nd + 2.0 * (hi - nd);
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double fpc_lambda_max(double x, std::size_t n) {
  check_family_args(x, n);
  const double nd = static_cast<double>(n);
  if (x == 1.0) return nd;
  const double e = 2.0 * std::log(x) / nd;
  const double q = std::exp(e);
  return ((x - 1.0) / x) * (x + q) / std::expm1(e);
}

CpcBounds cpc_bound_check(double x, std::size_t n) {
  if (!(x > 1.0)) throw ValidationError("bound check requires x > 1");
  const double nd = static_cast<double>(n);
  CpcBounds b;
  b.lhs = saaty_ci(cpc_lambda_max(x, n), n);
  b.bound2 = ((nd - 2.0) / (nd - 1.0)) * (1.0 / x + x - 2.0) / (nd * nd);
  b.bound3 = x / (nd * nd);
  return b;
}

double theorem1_bound(const PCMatrix& m) {
  const double nd = static_cast<double>(m.size());
  return nd + bound_term(kii(m).value) / (3.0 * nd);
}

double theorem2_bound(const PCMatrix& m) {
  if (m.size() < 3) throw ValidationError("theorem2_bound requires n >= 3");
  const double nd = static_cast<double>(m.size());
  double sum = 0.0;
  for_each_triple(m.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    sum += bound_term(triad_ii(m(i, j), m(i, k), m(j, k)));
  });
  return nd + sum / (3.0 * nd * (nd - 2.0));
}

std::string to_string(Family f) { return f == Family::CPC ? "cpc" : "fpc"; }

std::optional<Family> family_from_string(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cpc") return Family::CPC;
  if (lower == "fpc") return Family::FPC;
  return std::nullopt;
}

PCMatrix generate(Family f, double x, std::size_t n) {
  return f == Family::CPC ? cpc(x, n) : fpc(x, n);
}

double family_lambda_max(Family f, double x, std::size_t n) {
  return f == Family::CPC ? cpc_lambda_max(x, n) : fpc_lambda_max(x, n);
}

double family_cr(Family f, double x, std::size_t n, const RITable& ri) {
  return saaty_cr(saaty_ci(family_lambda_max(f, x, n), n), n, ri);
}

double max_acceptable_x(Family f, std::size_t n, double cr_threshold, const RITable& ri) {
  if (n < 3) throw ValidationError("max_acceptable_x requires n >= 3");
  if (!(cr_threshold > 0.0)) throw ValidationError("CR threshold must be positive");
  ri.at(static_cast<int>(n));

  auto cr = [&](double x) { return family_cr(f, x, n, ri); };
  double lo = 1.0, hi = 2.0;
  while (cr(hi) < cr_threshold) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw ValidationError("CR threshold not reachable");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cr(mid) < cr_threshold ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double delta_error(double x) { return approx_error(x, 1.0); }

double estimate_random_index(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (n < 3 || samples == 0) throw ValidationError("RI estimate needs n >= 3 and samples > 0");
  static constexpr std::array<double, 17> kScale = {
      1.0 / 9, 1.0 / 8, 1.0 / 7, 1.0 / 6, 1.0 / 5, 1.0 / 4, 1.0 / 3, 1.0 / 2, 1.0,
      2.0,     3.0,     4.0,     5.0,     6.0,     7.0,     8.0,     9.0};
  Rng rng(seed);
  double total = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    PCMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, kScale[rng.index(kScale.size())]);
    total += saaty_ci(power_iteration(m, {1e-10, 100000}).lambda_max, n);
  }
  return total / static_cast<double>(samples);
}

}  // namespace pcix
