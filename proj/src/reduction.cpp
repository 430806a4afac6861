#include "pcix/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "pcix/error.hpp"

namespace pcix {

WorstTriad worst_triad(const PCMatrix& m) { return kii(m); }

std::vector<RepairCandidate> propose_repairs(const PCMatrix& m) {
  const WorstTriad worst = kii(m);
  if (worst.value <= 0.0) throw AlreadyConsistentError("matrix is already consistent");
  const Triad& t = worst.triad;

  std::vector<RepairCandidate> out = {
      {{t.i, t.k}, t.y, t.x * t.z, 0.0},
      {{t.i, t.j}, t.x, t.y / t.z, 0.0},
      {{t.j, t.k}, t.z, t.y / t.x, 0.0},
  };
  for (auto& c : out) {
    const PCMatrix next = m.with(c.cell.i, c.cell.j, c.new_value);
    c.projected_kii = kii(next).value;
    c.projected_worst_count = count_worst_triads(next, c.projected_kii);
  }

  auto log_change = [](const RepairCandidate& c) { return std::abs(std::log(c.new_value / c.old_value)); };
  std::stable_sort(out.begin(), out.end(), [&](const RepairCandidate& a, const RepairCandidate& b) {
    if (a.projected_kii != b.projected_kii) return a.projected_kii < b.projected_kii;
    if (a.projected_worst_count != b.projected_worst_count)
      return a.projected_worst_count < b.projected_worst_count;
    return log_change(a) < log_change(b);
  });
  return out;
}

std::size_t count_worst_triads(const PCMatrix& m, double kii_value) {
  std::size_t count = 0;
  for_each_triple(m.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    if (triad_ii(m(i, j), m(i, k), m(j, k)) >= kii_value * (1.0 - 1e-12)) ++count;
  });
  return count;
}

std::pair<PCMatrix, ReductionStep> reduce_step(const PCMatrix& m) {
  const WorstTriad worst = kii(m);
  const RepairCandidate best = propose_repairs(m).front();
  PCMatrix next = m.with(best.cell.i, best.cell.j, best.new_value);
  ReductionStep step{worst.triad,
                     best.cell,
                     best.old_value,
                     best.new_value,
                     worst.value,
                     best.projected_kii,
                     count_worst_triads(m, worst.value),
                     best.projected_worst_count};
  return {std::move(next), step};
}

ReductionTrace reduce(const PCMatrix& m, double threshold, std::size_t max_steps) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ValidationError("reduction threshold must lie in (0, 1)");
  const std::size_t n = m.size();
  if (max_steps == 0) max_steps = 10 * (n * (n - 1) * (n - 2) / 6);

  ReductionTrace trace;
  trace.final_matrix = m;
  double current = kii(m).value;
  while (current > threshold && trace.steps.size() < max_steps) {
    auto [next, step] = reduce_step(trace.final_matrix);
    const bool lower = step.kii_after < step.kii_before;
    const bool thinner = step.kii_after == step.kii_before && step.worst_count_after < step.worst_count_before;
    if (!lower && !thinner) break;
    trace.final_matrix = std::move(next);
    trace.steps.push_back(step);
    current = step.kii_after;
  }
  trace.converged = current <= threshold;
  return trace;
}

}  // namespace pcix
