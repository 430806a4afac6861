#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "pcix/indicators.hpp"
#include "pcix/matrix.hpp"

namespace pcix {

/// Upper-triangle cell, 0-based.
struct Cell {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Exact repair of one triad cell so that y = x * z holds.
struct RepairCandidate {
  Cell cell;
  double old_value = 0.0;
  double new_value = 0.0;
  double projected_kii = 0.0;  // kii of the whole matrix after the repair
  std::size_t projected_worst_count = 0;  // triads left at projected_kii
};

/// The three repairs of the worst triad (x, y, z): y := xz at (i,k), x := y/z at
/// (i,j), z := y/x at (j,k). Sorted by projected kii, then by how many triads
/// stay at that value, then by |ln(new/old)|, then in that cell order. Throws AlreadyConsistentError when kii is 0.
std::vector<RepairCandidate> propose_repairs(const PCMatrix& m);

struct ReductionStep {
  Triad triad;
  Cell changed_cell;
  double old_value = 0.0;
  double new_value = 0.0;
  double kii_before = 0.0;
  double kii_after = 0.0;
  // Triads scoring kii (within 1e-12 relative), before and after the step.
  std::size_t worst_count_before = 0;
  std::size_t worst_count_after = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  PCMatrix final_matrix{2};
  bool converged = false;
};

WorstTriad worst_triad(const PCMatrix& m);

/// Applies the best of the three repairs. Throws AlreadyConsistentError when kii is 0.
std::pair<PCMatrix, ReductionStep> reduce_step(const PCMatrix& m);

inline constexpr double kDefaultReductionThreshold = 1.0 / 3.0;

/// Triads whose score is within 1e-12 (relative) of the matrix's kii.
std::size_t count_worst_triads(const PCMatrix& m, double kii_value);

/// Repeats reduce_step until kii <= threshold. A step is taken when it lowers
/// kii, or keeps it while leaving fewer triads at that value; otherwise, or
/// after max_steps (0 means 10 * C(n,3)), the trace ends unconverged.
ReductionTrace reduce(const PCMatrix& m, double threshold = kDefaultReductionThreshold,
                      std::size_t max_steps = 0);

}  // namespace pcix
