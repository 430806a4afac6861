#include "pcix/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "pcix/error.hpp"

namespace pcix {
namespace {

void require_triad_order(const PCMatrix& m, const char* what) {
  if (m.size() < 3)
    throw ValidationError(std::string(what) + " requires n >= 3; a 2x2 matrix has no triads");
}

constexpr double kAxiomTol = 1e-12;

}  // namespace

double triad_ii(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0))
    throw ValidationError("triad values must be positive");
  const double xz = x * z;
  return 1.0 - std::min(y / xz, xz / y);
}

double triad_ii_exp(double x, double y, double z) {
  if (!(x > 0.0 && y > 0.0 && z > 0.0))
    throw ValidationError("triad values must be positive");
  return 1.0 - std::exp(-std::abs(std::log(y / (x * z))));
}

WorstTriad kii(const PCMatrix& m) {
  require_triad_order(m, "kii");
  WorstTriad worst{triad_at(m, 0, 1, 2), -1.0};
  for_each_triple(m.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    const double v = triad_ii(m(i, j), m(i, k), m(j, k));
    if (v > worst.value) worst = {triad_at(m, i, j, k), v};
  });
  return worst;
}

double chain_ii(const PCMatrix& m) {
  require_triad_order(m, "chain_ii");
  const std::size_t n = m.size();
  double min_ratio = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double chain = m(i, i + 1);
    for (std::size_t j = i + 2; j < n; ++j) {
      chain *= m(j - 1, j);
      const double a = m(i, j);
      min_ratio = std::min({min_ratio, a / chain, chain / a});
    }
  }
  return 1.0 - min_ratio;
}

TriadIndicator distance_indicator() {
  return {"distance", [](double x, double y, double z) { return triad_ii(x, y, z); }};
}

std::vector<double> default_axiom_grid() {
  return {1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0};
}

AxiomReport check_axioms(const TriadIndicator& ind, const std::vector<double>& grid,
                         std::size_t max_counterexamples) {
  if (grid.empty()) throw ValidationError("axiom grid is empty");
  for (double g : grid)
    if (!(g > 0.0) || !std::isfinite(g)) throw ValidationError("axiom grid values must be positive");

  AxiomReport report;
  std::size_t kept[4] = {0, 0, 0, 0};
  auto eval = [&](double x, double y, double z) {
    ++report.evaluations;
    return ind.eval(x, y, z);
  };
  auto violate = [&](int axiom, std::array<double, 3> in, std::array<double, 3> out, double vin,
                     double vout) {
    (axiom == 1 ? report.axiom1_holds : axiom == 2 ? report.axiom2_holds : report.axiom3_holds) =
        false;
    if (kept[axiom]++ < max_counterexamples)
      report.counterexamples.push_back({axiom, in, out, vin, vout});
  };

  for (double x : grid)
    for (double z : grid) {
      const double v = eval(x, x * z, z);
      if (!(std::abs(v) <= kAxiomTol)) violate(1, {x, x * z, z}, {x, x * z, z}, 0.0, v);
    }

  for (double x : grid)
    for (double y : grid)
      for (double z : grid) {
        const std::array<double, 3> t{x, y, z};
        const double v = eval(x, y, z);
        if (!(v >= 0.0 && v < 1.0)) violate(2, t, t, v, v);

        const double xz = x * z;
        const bool consistent = std::abs(xz - y) <= kAxiomTol * y;
        if (consistent) {
          // Any single-coordinate move off a consistent triad must raise the score.
          for (int c = 0; c < 3; ++c)
            for (double g : grid) {
              std::array<double, 3> u = t;
              u[c] = g;
              if (std::abs(u[0] * u[2] - u[1]) <= kAxiomTol * u[1]) continue;
              const double w = eval(u[0], u[1], u[2]);
              if (!(w > v)) violate(3, t, u, v, w);
            }
          continue;
        }

        // Case (a) xz < y: worse means smaller x, z and larger y. Case (b) mirrors it.
        const bool case_a = xz < y;
        for (double x2 : grid)
          for (double y2 : grid)
            for (double z2 : grid) {
              if (x2 == x && y2 == y && z2 == z) continue;
              const bool dominated = case_a ? (x2 <= x && z2 <= z && y2 >= y)
                                            : (x2 >= x && z2 >= z && y2 <= y);
              if (!dominated) continue;
              const double w = eval(x2, y2, z2);
              const bool strict =
                  case_a ? (x2 * z2 < xz && y2 > y) : (x2 * z2 > xz && y2 < y);
              const bool ok = strict ? (w > v) : (w >= v - kAxiomTol);
              if (!ok) violate(3, t, {x2, y2, z2}, v, w);
            }
      }
  return report;
}

}  // namespace pcix
