// pcix: command-line front end for pairwise comparison inconsistency analysis.
//
// Exit codes: 0 success, 1 validation error, 2 reproduction failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pcix/error.hpp"
#include "pcix/indicators.hpp"
#include "pcix/io.hpp"
#include "pcix/reduction.hpp"
#include "pcix/report.hpp"
#include "pcix/reproduce.hpp"
#include "pcix/service.hpp"
#include "pcix/spectral.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitReproduction = 2;

std::string triad_label(const pcix::Triad& t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%zu,%zu,%zu) = (%.9g, %.9g, %.9g)", t.i + 1, t.j + 1, t.k + 1,
                t.x, t.y, t.z);
  return buf;
}

void print_analysis(const pcix::IndicatorReport& r, const pcix::RITable& ri) {
  using pcix::format_indicator;
  std::cout << "n:           " << r.n << "\n";
  if (r.worst) {
    std::cout << "kii:         " << format_indicator(r.worst->value) << "\n";
    std::cout << "worst triad: " << triad_label(r.worst->triad) << "\n";
    std::cout << "chain_ii:    " << format_indicator(*r.chain) << "\n";
  } else {
    std::cout << "kii:         n/a (no triads in a 2x2 matrix)\n";
  }
  std::cout << "lambda_max:  " << format_indicator(r.lambda_max) << "\n";
  std::cout << "CI:          " << format_indicator(r.ci) << "\n";
  if (r.cr)
    std::cout << "CR:          " << format_indicator(*r.cr) << "  (RI(" << r.n
              << ")=" << ri.at(static_cast<int>(r.n)) << ")\n";
  else
    std::cout << "CR:          n/a (no RI for n=" << r.n << ")\n";
  std::cout << "weights:    ";
  for (double w : r.weights) std::cout << ' ' << format_indicator(w);
  std::cout << "\nconsistent:  " << (r.consistent ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise comparison matrix inconsistency toolkit"};
  app.require_subcommand(1);

  std::string ri_path;
  double tol = 1e-12;
  std::uint64_t seed = 1;
  app.add_option("--ri-table", ri_path, "JSON map n -> random index")->check(CLI::ExistingFile);
  app.add_option("--tol", tol, "Power iteration tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized commands");

  std::string file;
  bool json_out = false;

  auto* analyze = app.add_subcommand("analyze", "Print kii, chain_ii, lambda_max, CI, CR and the worst triad");
  analyze->add_option("file", file, "Matrix file (CSV or JSON)")->required();
  analyze->add_flag("--json", json_out, "Print the service's analyze response");

  std::size_t top = 10;
  auto* localize = app.add_subcommand("localize", "Rank triads by inconsistency");
  localize->add_option("file", file, "Matrix file (CSV or JSON)")->required();
  localize->add_option("--top", top, "Number of triads to list");

  double threshold = pcix::kDefaultReductionThreshold;
  std::size_t max_steps = 0;
  std::string output;
  auto* reduce = app.add_subcommand("reduce", "Repair worst triads until kii <= threshold");
  reduce->add_option("file", file, "Matrix file (CSV or JSON)")->required();
  reduce->add_option("--threshold", threshold, "Target kii")->check(CLI::Range(0.0, 1.0));
  reduce->add_option("--max-steps", max_steps, "Step limit (default 10*C(n,3))");
  reduce->add_option("-o,--output", output, "Write the final matrix here as CSV");

  std::string family;
  double x = 0.0;
  std::size_t n = 0;
  std::string format = "csv";
  auto* gen = app.add_subcommand("generate", "Print CPC(x,n) or FPC(x,n)");
  gen->add_option("family", family, "cpc or fpc")->required()->check(CLI::IsMember({"cpc", "fpc"}));
  gen->add_option("--x", x, "Off-diagonal value")->required();
  gen->add_option("--n", n, "Matrix order")->required();
  gen->add_option("--format", format, "csv, upper or json")->check(CLI::IsMember({"csv", "upper", "json"}));

  auto* repro = app.add_subcommand("reproduce", "Recompute the reference golden numbers");
  repro->add_flag("--json", json_out, "Machine-readable report");

  std::size_t samples = 2000;
  auto* est = app.add_subcommand("estimate-ri", "Small-sample random index estimate");
  est->add_option("--n", n, "Matrix order")->required();
  est->add_option("--samples", samples, "Random matrices to average");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--host", host, "Bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const pcix::RITable ri = ri_path.empty() ? pcix::RITable::defaults() : pcix::load_ri_table_file(ri_path);
    const pcix::PowerOptions popts{tol, 100000};

    if (*analyze) {
      const auto doc = pcix::load_matrix_file(file);
      if (json_out) {
        std::cout << pcix::analyze_response(doc.matrix, ri).dump(2) << "\n";
      } else {
        print_analysis(pcix::analyze(doc.matrix, ri, popts), ri);
      }
      return 0;
    }

    if (*localize) {
      const auto m = pcix::load_matrix_file(file).matrix;
      auto all = pcix::triads(m);
      if (all.empty()) throw pcix::ValidationError("localize requires n >= 3");
      std::stable_sort(all.begin(), all.end(), [](const pcix::Triad& a, const pcix::Triad& b) {
        return pcix::triad_ii(a) > pcix::triad_ii(b);
      });
      const auto worst = pcix::worst_triad(m);
      std::cout << "worst triad " << triad_label(worst.triad) << "  ii=" << pcix::format_indicator(worst.value)
                << "\n";
      for (std::size_t t = 0; t < std::min(top, all.size()); ++t)
        std::cout << "  " << pcix::format_indicator(pcix::triad_ii(all[t])) << "  " << triad_label(all[t]) << "\n";
      return 0;
    }

    if (*reduce) {
      const auto m = pcix::load_matrix_file(file).matrix;
      const auto trace = pcix::reduce(m, threshold, max_steps);
      std::cout << "initial kii " << pcix::format_indicator(pcix::kii(m).value) << "\n";
      for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const auto& st = trace.steps[s];
        std::printf("step %zu: triad (%zu,%zu,%zu) cell (%zu,%zu) %.9g -> %.9g  kii %s -> %s\n", s + 1,
                    st.triad.i + 1, st.triad.j + 1, st.triad.k + 1, st.changed_cell.i + 1,
                    st.changed_cell.j + 1, st.old_value, st.new_value,
                    pcix::format_indicator(st.kii_before).c_str(), pcix::format_indicator(st.kii_after).c_str());
      }
      std::cout << (trace.converged ? "converged" : "not converged") << ", final kii "
                << pcix::format_indicator(pcix::kii(trace.final_matrix).value) << "\n";
      std::fflush(stdout);
      if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw pcix::ValidationError("cannot write " + output);
        out << pcix::to_csv(trace.final_matrix);
      } else {
        std::cout << pcix::to_csv(trace.final_matrix);
      }
      return 0;
    }

    if (*gen) {
      const auto fam = *pcix::family_from_string(family);
      const auto m = pcix::generate(fam, x, n);
      if (format == "json")
        std::cout << pcix::to_json(m).dump(2) << "\n";
      else if (format == "upper")
        std::cout << pcix::to_upper_csv(m);
      else
        std::cout << pcix::to_csv(m);
      return 0;
    }

    if (*repro) {
      const auto rows = pcix::reproduce(ri);
      if (json_out)
        std::cout << pcix::to_json(rows).dump(2) << "\n";
      else
        std::cout << pcix::format_table(rows);
      return pcix::all_pass(rows) ? 0 : kExitReproduction;
    }

    if (*est) {
      std::cout << pcix::estimate_random_index(n, samples, seed) << "\n";
      return 0;
    }

    if (*serve) {
      pcix::ApiServer server(ri);
      const int bound = server.bind(host, port);
      if (bound < 0) throw pcix::ValidationError("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      return server.listen() ? 0 : 1;
    }
  } catch (const pcix::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const pcix::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
