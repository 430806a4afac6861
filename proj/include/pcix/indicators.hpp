#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pcix/matrix.hpp"

namespace pcix {

/// Distance-based triad inconsistency 1 - min(y/(xz), xz/y), in [0, 1).
/// Throws ValidationError on nonpositive input.
double triad_ii(double x, double y, double z);
inline double triad_ii(const Triad& t) { return triad_ii(t.x, t.y, t.z); }

/// The same quantity written as 1 - exp(-|ln(y/(xz))|).
double triad_ii_exp(double x, double y, double z);

struct WorstTriad {
  Triad triad;
  double value = 0.0;
};

/// Largest triad inconsistency and the triad attaining it. Ties go to the
/// lexicographically smallest (i, j, k). Requires n >= 3.
WorstTriad kii(const PCMatrix& m);

/// Global indicator comparing each a_ij with the consecutive chain product
/// a_{i,i+1} a_{i+1,i+2} ... a_{j-1,j}. Requires n >= 3.
double chain_ii(const PCMatrix& m);

struct TriadIndicator {
  std::string name;
  std::function<double(double, double, double)> eval;
};

TriadIndicator distance_indicator();

struct AxiomCounterexample {
  int axiom = 0;
  std::array<double, 3> triad_in{};
  std::array<double, 3> triad_out{};
  double value_in = 0.0;
  double value_out = 0.0;
};

struct AxiomReport {
  bool axiom1_holds = true;
  bool axiom2_holds = true;
  bool axiom3_holds = true;
  std::size_t evaluations = 0;
  std::vector<AxiomCounterexample> counterexamples;

  bool all_hold() const { return axiom1_holds && axiom2_holds && axiom3_holds; }
};

/// {1/3, 1/2, 2/3, 1, 1.5, 2, 2.5, 3, 4, 5}
std::vector<double> default_axiom_grid();

/// Exhaustive check of the three inconsistency axioms on grid^3:
///   1. ind(x, xz, z) == 0
///   2. 0 <= ind < 1
///   3. moving an inconsistent triad further from consistency never lowers the
///      score: for xz < y, any x' <= x, z' <= z, y' >= y (not all equal) gives
///      ind' >= ind, strictly when x'z' < xz and y' > y; mirrored for xz > y.
/// At most `max_counterexamples` violations are kept per axiom.
AxiomReport check_axioms(const TriadIndicator& ind, const std::vector<double>& grid,
                         std::size_t max_counterexamples = 8);

}  // namespace pcix
