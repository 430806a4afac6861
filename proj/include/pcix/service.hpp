#pragma once

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "pcix/matrix.hpp"
#include "pcix/spectral.hpp"

namespace pcix {

/// Reals in service responses carry this many significant digits.
inline constexpr int kServiceDigits = 12;

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// AnalyzeResponse for one matrix. Indices are 1-based. For n = 2 the triad
/// fields are null and triad_heat is empty.
nlohmann::json analyze_response(const PCMatrix& m, const RITable& ri);

// Request handlers, independent of the transport. Bodies are raw JSON text.
ApiResponse handle_analyze(const std::string& body, const RITable& default_ri);
ApiResponse handle_propose_repairs(const std::string& body);
ApiResponse handle_generate(const std::optional<std::string>& family,
                            const std::optional<std::string>& x,
                            const std::optional<std::string>& n);

/// Stateless HTTP front end:
///   POST /api/analyze          matrix JSON (+ optional "ri" table) -> AnalyzeResponse
///   POST /api/propose-repairs  matrix JSON -> three repair candidates
///   GET  /api/generate?family=cpc|fpc&x=X&n=N -> matrix JSON
class ApiServer {
 public:
  explicit ApiServer(RITable ri = RITable::defaults());
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds to host:port (port 0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Call after bind().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pcix
