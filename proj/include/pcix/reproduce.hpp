#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pcix/spectral.hpp"

namespace pcix {

enum class Comparison {
  Absolute,  // |computed - expected| <= tolerance
  Relative,  // |computed / expected - 1| <= tolerance
  Below,     // computed < expected
};

struct GoldenRow {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Absolute;
  bool pass = false;
  std::string note;
};

GoldenRow make_row(std::string name, double computed, double expected, double tolerance,
                   Comparison cmp = Comparison::Absolute, std::string note = {});

/// Recomputes the reference numbers: the 3x3 worked example, CPC(2.62,3),
/// CPC(6,6), FPC(2.25,4), FPC(2.84,7) and the maximal acceptable CPC errors for
/// n = 3..7. RI-dependent rows take their values from `ri` and say so in `note`.
std::vector<GoldenRow> reproduce(const RITable& ri = RITable::defaults());

bool all_pass(const std::vector<GoldenRow>& rows);

nlohmann::json to_json(const std::vector<GoldenRow>& rows);
std::string format_table(const std::vector<GoldenRow>& rows);

}  // namespace pcix
