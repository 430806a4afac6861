#include "pcix/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pcix/indicators.hpp"
#include "pcix/matrix.hpp"

namespace pcix {
namespace {

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Absolute: return "abs";
    case Comparison::Relative: return "rel";
    case Comparison::Below: return "lt";
  }
  return "?";
}

std::string ri_note(const RITable& ri, int n) {
  std::ostringstream os;
  os << "RI(" << n << ")=" << ri.at(n);
  return os.str();
}

}  // namespace

GoldenRow make_row(std::string name, double computed, double expected, double tolerance,
                   Comparison cmp, std::string note) {
  GoldenRow r{std::move(name), computed, expected, tolerance, cmp, false, std::move(note)};
  switch (cmp) {
    case Comparison::Absolute: r.pass = std::abs(computed - expected) <= tolerance; break;
    case Comparison::Relative: r.pass = std::abs(computed / expected - 1.0) <= tolerance; break;
    case Comparison::Below: r.pass = computed < expected; break;
  }
  return r;
}

std::vector<GoldenRow> reproduce(const RITable& ri) {
  std::vector<GoldenRow> rows;

  // 3x3 worked example: one triad (2,2,2).
  const UpperEntry upper[] = {{1, 2, 2.0}, {1, 3, 2.0}, {2, 3, 2.0}};
  const PCMatrix a = make_matrix(upper);
  const WeightVector s = geometric_mean_weights(a);
  const double expected_s[] = {0.4934, 0.3108, 0.1958};
  for (std::size_t i = 0; i < 3; ++i)
    rows.push_back(make_row("example3.weight[" + std::to_string(i + 1) + "]", s[i], expected_s[i], 5e-4));
  const PCMatrix b = consistent_approx(s);
  rows.push_back(make_row("example3.B(1,2)", b(0, 1), 1.5874011, 1e-6));
  rows.push_back(make_row("example3.B(1,3)", b(0, 2), 2.5198421, 1e-6));
  rows.push_back(make_row("example3.B(2,3)", b(1, 2), 1.5874011, 1e-6));
  rows.push_back(make_row("example3.B(2,1)", b(1, 0), 0.6299605, 1e-6));
  rows.push_back(make_row("example3.B(3,1)", b(2, 0), 0.3968503, 1e-6));

  {
    const EigenResult e = power_iteration(cpc(2.62, 3));
    const double ci = saaty_ci(e.lambda_max, 3);
    rows.push_back(make_row("cpc(2.62,3).lambda_max", e.lambda_max, 3.10397, 1e-4));
    rows.push_back(make_row("cpc(2.62,3).ci", ci, 0.051985, 1e-5));
    rows.push_back(make_row("cpc(2.62,3).cr", saaty_cr(ci, 3, ri), 0.1, 0.0, Comparison::Below,
                            ri_note(ri, 3)));
  }
  {
    const EigenResult e = power_iteration(cpc(6.0, 6));
    const CpcBounds bounds = cpc_bound_check(6.0, 6);
    rows.push_back(make_row("cpc(6,6).lambda_max", e.lambda_max, 6.406123, 1e-5));
    rows.push_back(make_row("cpc(6,6).lambda_max.cubic", cpc_lambda_max(6.0, 6), 6.406123, 1e-5));
    rows.push_back(make_row("cpc(6,6).ci", saaty_ci(e.lambda_max, 6), 0.081224, 1e-5));
    rows.push_back(make_row("cpc(6,6).bound2", bounds.bound2, 0.0925925, 1e-6));
  }
  {
    const double closed = fpc_lambda_max(2.25, 4);
    const EigenResult e = power_iteration(fpc(2.25, 4));
    rows.push_back(make_row("fpc(2.25,4).lambda_max.closed", closed, 25.0 / 6.0, 1e-9));
    rows.push_back(make_row("fpc(2.25,4).lambda_max.power", e.lambda_max, closed, 1e-8));
    rows.push_back(make_row("fpc(2.25,4).ci", saaty_ci(closed, 4), 1.0 / 18.0, 1e-9));
    rows.push_back(make_row("fpc(2.25,4).delta_error", delta_error(2.25), 0.5556, 1e-4));
  }
  rows.push_back(make_row("fpc(2.84,7).delta_error", delta_error(2.84), 0.6479, 1e-4));

  const double ratio_targets[] = {262.0, 417.0, 618.0, 875.0, 1170.0};  // percent
  for (std::size_t n = 3; n <= 7; ++n) {
    const double x = max_acceptable_x(Family::CPC, n, 0.1, ri);
    rows.push_back(make_row("max_acceptable_x(cpc," + std::to_string(n) + ",0.1).ratio_error_pct",
                            ratio_error(x), ratio_targets[n - 3], 0.03, Comparison::Relative,
                            ri_note(ri, static_cast<int>(n))));
  }
  return rows;
}

bool all_pass(const std::vector<GoldenRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const GoldenRow& r) { return r.pass; });
}

nlohmann::json to_json(const std::vector<GoldenRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"name", r.name},           {"computed", r.computed},
                        {"expected", r.expected},   {"tolerance", r.tolerance},
                        {"pass", r.pass},           {"comparison", comparison_name(r.comparison)}};
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

std::string format_table(const std::vector<GoldenRow>& rows) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-44s %16s %16s %10s %4s  %s\n", "name", "computed", "expected",
                "tolerance", "ok", "note");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-44s %16.9g %16.9g %4s %-5.0e %4s  %s\n", r.name.c_str(),
                  r.computed, r.expected, comparison_name(r.comparison), r.tolerance,
                  r.pass ? "PASS" : "FAIL", r.note.c_str());
    os << line;
  }
  return os.str();
}

}  // namespace pcix
