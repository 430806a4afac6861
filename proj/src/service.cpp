#include "pcix/service.hpp"

#include <charconv>
#include <cmath>

#include "httplib.h"
#include "pcix/error.hpp"
#include "pcix/indicators.hpp"
#include "pcix/io.hpp"
#include "pcix/reduction.hpp"
#include "pcix/report.hpp"

namespace pcix {
namespace {

using nlohmann::json;

double r12(double v) { return round_significant(v, kServiceDigits); }

ApiResponse error_response(int status, const std::string& code, const std::string& reason) {
  return {status, {{"error", code}, {"reason", reason}}};
}

json triad_json(const Triad& t, double value) {
  return {{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1},
          {"x", r12(t.x)}, {"y", r12(t.y)}, {"z", r12(t.z)}, {"value", r12(value)}};
}

std::optional<double> parse_number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

json analyze_response(const PCMatrix& m, const RITable& ri) {
  const IndicatorReport rep = analyze(m, ri);
  json weights = json::array();
  for (double w : rep.weights) weights.push_back(r12(w));

  json heat = json::array();
  if (m.size() >= 3)
    for (const Triad& t : triads(m))
      heat.push_back({{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"ii", r12(triad_ii(t))}});

  return {
      {"n", rep.n},
      {"kii", rep.worst ? json(r12(rep.worst->value)) : json(nullptr)},
      {"chain_ii", rep.chain ? json(r12(*rep.chain)) : json(nullptr)},
      {"lambda_max", r12(rep.lambda_max)},
      {"ci", r12(rep.ci)},
      {"cr", rep.cr ? json(r12(*rep.cr)) : json(nullptr)},
      {"weights", std::move(weights)},
      {"worst_triad", rep.worst ? triad_json(rep.worst->triad, rep.worst->value) : json(nullptr)},
      {"triad_heat", std::move(heat)},
      {"consistent", rep.consistent},
  };
}

ApiResponse handle_analyze(const std::string& body, const RITable& default_ri) {
  try {
    const json j = json::parse(body);
    const MatrixDocument doc = parse_matrix_json(j);
    const RITable ri = j.contains("ri") ? parse_ri_table(j["ri"]) : default_ri;
    return {200, analyze_response(doc.matrix, ri)};
  } catch (const json::exception& e) {
    return error_response(400, "malformed_json", e.what());
  } catch (const ValidationError& e) {
    return error_response(400, "validation", e.what());
  } catch (const ConvergenceError& e) {
    return error_response(422, "no_convergence", e.what());
  }
}

ApiResponse handle_propose_repairs(const std::string& body) {
  try {
    const MatrixDocument doc = parse_matrix_json(json::parse(body));
    if (doc.matrix.size() < 3 || kii(doc.matrix).value <= 0.0)
      return error_response(409, "already_consistent", "matrix has no inconsistent triad");
    json out = json::array();
    for (const RepairCandidate& c : propose_repairs(doc.matrix))
      out.push_back({{"cell", {c.cell.i + 1, c.cell.j + 1}},
                     {"old", r12(c.old_value)},
                     {"new", r12(c.new_value)},
                     {"projected_kii", r12(c.projected_kii)}});
    return {200, std::move(out)};
  } catch (const json::exception& e) {
    return error_response(400, "malformed_json", e.what());
  } catch (const ValidationError& e) {
    return error_response(400, "validation", e.what());
  }
}

ApiResponse handle_generate(const std::optional<std::string>& family,
                            const std::optional<std::string>& x,
                            const std::optional<std::string>& n) {
  if (!family || !x || !n) return error_response(400, "validation", "family, x and n are required");
  const auto fam = family_from_string(*family);
  if (!fam) return error_response(400, "validation", "family must be cpc or fpc");
  const auto xv = parse_number(*x);
  if (!xv || !(*xv > 0.0) || !std::isfinite(*xv))
    return error_response(400, "validation", "x must be a positive number");
  const auto nv = parse_number(*n);
  if (!nv || *nv != std::floor(*nv) || *nv < 3 || *nv > static_cast<double>(kMaxOrder))
    return error_response(400, "validation", "n must be an integer in [3, 64]");
  MatrixDocument doc{generate(*fam, *xv, static_cast<std::size_t>(*nv)),
                     to_string(*fam) + "(" + *x + "," + *n + ")", std::nullopt};
  return {200, to_json(doc, kServiceDigits)};
}

struct ApiServer::Impl {
  RITable ri;
  httplib::Server server;
};

ApiServer::ApiServer(RITable ri) : impl_(std::make_unique<Impl>()) {
  impl_->ri = std::move(ri);
  auto& srv = impl_->server;
  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});

  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto query = [](const httplib::Request& req, const char* key) -> std::optional<std::string> {
    if (!req.has_param(key)) return std::nullopt;
    return req.get_param_value(key);
  };

  srv.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  srv.Post("/api/analyze", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_analyze(req.body, impl_->ri));
  });
  srv.Post("/api/propose-repairs", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_propose_repairs(req.body));
  });
  srv.Get("/api/generate", [reply, query](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_generate(query(req, "family"), query(req, "x"), query(req, "n")));
  });
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::listen() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_) impl_->server.stop();
}

void ApiServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace pcix
