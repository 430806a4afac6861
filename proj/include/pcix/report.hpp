#pragma once

#include <optional>
#include <vector>

#include "pcix/indicators.hpp"
#include "pcix/matrix.hpp"
#include "pcix/spectral.hpp"

namespace pcix {

/// Everything `analyze` reports about one matrix. Triad-based fields are empty
/// for n = 2, and cr is empty when the RI table has no entry for n.
struct IndicatorReport {
  std::size_t n = 0;
  std::optional<WorstTriad> worst;
  std::optional<double> chain;
  double lambda_max = 0.0;
  double ci = 0.0;
  std::optional<double> cr;
  std::vector<double> weights;  // geometric means
  bool consistent = true;
};

IndicatorReport analyze(const PCMatrix& m, const RITable& ri = RITable::defaults(),
                        const PowerOptions& opts = {});

}  // namespace pcix
