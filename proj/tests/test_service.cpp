#include <cmath>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "pcix/indicators.hpp"
#include "pcix/io.hpp"
#include "pcix/report.hpp"
#include "pcix/sampling.hpp"
#include "pcix/service.hpp"

using namespace pcix;
using nlohmann::json;

namespace {

const char* kMatrixA = R"({"n": 3, "entries": [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]]})";

bool close12(double served, double lib) { return std::abs(served - lib) <= 5e-12 * std::max(1.0, std::abs(lib)); }

class RunningServer {
 public:
  RunningServer() {
    port_ = server_.bind("127.0.0.1", 0);
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { server_.listen(); });
    server_.wait_until_ready();
  }
  ~RunningServer() {
    server_.stop();
    thread_.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

 private:
  ApiServer server_;
  int port_ = -1;
  std::thread thread_;
};

}  // namespace

TEST_CASE("analyze handler") {
  const ApiResponse r = handle_analyze(kMatrixA, RITable::defaults());
  REQUIRE(r.status == 200);
  CHECK(r.body["kii"].get<double>() == 0.5);
  CHECK(r.body["chain_ii"].get<double>() == 0.5);
  CHECK(std::abs(r.body["weights"][0].get<double>() - 0.4934) <= 5e-4);
  CHECK(std::abs(r.body["weights"][1].get<double>() - 0.3108) <= 5e-4);
  CHECK(std::abs(r.body["weights"][2].get<double>() - 0.1958) <= 5e-4);
  CHECK(r.body["worst_triad"]["i"] == 1);
  CHECK(r.body["worst_triad"]["j"] == 2);
  CHECK(r.body["worst_triad"]["k"] == 3);
  CHECK(r.body["triad_heat"].size() == 1);
  CHECK(r.body["consistent"] == false);

  const ApiResponse ones = handle_analyze(to_json(PCMatrix(4)).dump(), RITable::defaults());
  CHECK(ones.body["kii"].get<double>() == 0.0);
  CHECK(ones.body["cr"].get<double>() == 0.0);
  CHECK(ones.body["triad_heat"].size() == 4);
  CHECK(ones.body["consistent"] == true);

  const ApiResponse c = handle_analyze(to_json(cpc(2.62, 3)).dump(), RITable::defaults());
  CHECK(std::abs(c.body["lambda_max"].get<double>() - 3.10397) <= 1e-4);
  CHECK(std::abs(c.body["ci"].get<double>() - 0.051985) <= 1e-5);
}

TEST_CASE("analyze handler edge cases") {
  const ApiResponse two = handle_analyze(R"({"entries": [[1, 3], [0.333333333333333, 1]]})", RITable::defaults());
  REQUIRE(two.status == 200);
  CHECK(two.body["kii"].is_null());
  CHECK(two.body["chain_ii"].is_null());
  CHECK(two.body["worst_triad"].is_null());
  CHECK(two.body["triad_heat"].empty());
  CHECK(two.body["consistent"] == true);

  const ApiResponse big = handle_analyze(to_json(cpc(2, 9)).dump(), RITable::defaults());
  CHECK(big.body["cr"].is_null());
  const ApiResponse with_ri =
      handle_analyze(R"({"entries": [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]], "ri": {"3": 0.52}})",
                     RITable::defaults());
  CHECK(with_ri.body["cr"].get<double>() ==
        doctest::Approx(with_ri.body["ci"].get<double>() / 0.52).epsilon(1e-10));

  const ApiResponse bad = handle_analyze(R"({"entries": [[1, 2], [0.4, 1]]})", RITable::defaults());
  CHECK(bad.status == 400);
  CHECK(bad.body["error"] == "validation");
  CHECK(handle_analyze(R"({"entries": [[1, -2], [-0.5, 1]]})", RITable::defaults()).status == 400);
  CHECK(handle_analyze(R"({"entries": [[1, 2, 3], [0.5, 1]]})", RITable::defaults()).status == 400);
  CHECK(handle_analyze("not json", RITable::defaults()).body["error"] == "malformed_json");
}

TEST_CASE("propose-repairs handler") {
  const ApiResponse r = handle_propose_repairs(kMatrixA);
  REQUIRE(r.status == 200);
  REQUIRE(r.body.size() == 3);
  CHECK(r.body[0]["cell"] == json::array({1, 3}));
  CHECK(r.body[0]["old"].get<double>() == 2.0);
  CHECK(r.body[0]["new"].get<double>() == 4.0);
  CHECK(r.body[0]["projected_kii"].get<double>() == 0.0);

  const ApiResponse f = handle_propose_repairs(to_json(fpc(2, 3)).dump());
  CHECK(f.body[0]["cell"] == json::array({1, 3}));
  CHECK(f.body[0]["new"].get<double>() == 4.0);

  CHECK(handle_propose_repairs(to_json(PCMatrix(4)).dump()).status == 409);
  CHECK(handle_propose_repairs(to_json(PCMatrix(2)).dump()).status == 409);
  CHECK(handle_propose_repairs("[").status == 400);
}

TEST_CASE("applying a proposal reproduces its projected kii") {
  Rng rng(9);
  for (int s = 0; s < 30; ++s) {
    const PCMatrix m = random_reciprocal(3 + rng.index(6), rng);
    const json body = to_json(m, 17);
    const ApiResponse props = handle_propose_repairs(body.dump());
    REQUIRE(props.status == 200);
    double prev = -1.0;
    for (const auto& c : props.body) {
      const double projected = c["projected_kii"].get<double>();
      REQUIRE(projected >= prev);
      prev = projected;
      json edited = body;
      const std::size_t i = c["cell"][0].get<std::size_t>() - 1, j = c["cell"][1].get<std::size_t>() - 1;
      edited["entries"][i][j] = c["new"].get<double>();
      edited["entries"][j][i] = 1.0 / c["new"].get<double>();
      const ApiResponse re = handle_analyze(edited.dump(), RITable::defaults());
      REQUIRE(std::abs(re.body["kii"].get<double>() - projected) <= 1e-10);
    }
  }
}

TEST_CASE("generate handler") {
  const ApiResponse c = handle_generate("cpc", "2.62", "3");
  REQUIRE(c.status == 200);
  CHECK(c.body["entries"][0][2].get<double>() == 2.62);
  CHECK(std::abs(c.body["entries"][2][0].get<double>() - 0.381679389) <= 1e-9);

  const ApiResponse f = handle_generate("fpc", "1", "5");
  CHECK(parse_matrix_json(f.body).matrix == PCMatrix(5));

  const ApiResponse big = handle_generate("cpc", "6", "6");
  const ApiResponse an = handle_analyze(big.body.dump(), RITable::defaults());
  CHECK(std::abs(an.body["lambda_max"].get<double>() - 6.406123) <= 1e-5);

  CHECK(handle_generate("cpc", "0", "4").status == 400);
  CHECK(handle_generate("cpc", "2", "2").status == 400);
  CHECK(handle_generate("cpc", "2", "65").status == 400);
  CHECK(handle_generate("cpc", "2", "4.5").status == 400);
  CHECK(handle_generate("abc", "2", "4").status == 400);
  CHECK(handle_generate(std::nullopt, "2", "4").status == 400);
}

TEST_CASE("HTTP round trip") {
  RunningServer server;
  auto cli = server.client();

  auto res = cli.Post("/api/analyze", kMatrixA, "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Content-Type") == "application/json");
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(json::parse(res->body)["kii"].get<double>() == 0.5);

  // Stateless: the same body gives the same bytes.
  auto again = cli.Post("/api/analyze", kMatrixA, "application/json");
  CHECK(again->body == res->body);

  auto bad = cli.Post("/api/analyze", R"({"entries": [[1, 2], [0.4, 1]]})", "application/json");
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body).contains("reason"));

  auto rep = cli.Post("/api/propose-repairs", kMatrixA, "application/json");
  CHECK(rep->status == 200);
  CHECK(json::parse(rep->body)[0]["new"].get<double>() == 4.0);
  auto cons = cli.Post("/api/propose-repairs", to_json(PCMatrix(3)).dump(), "application/json");
  CHECK(cons->status == 409);

  auto gen = cli.Get("/api/generate?family=fpc&x=2.25&n=4");
  CHECK(gen->status == 200);
  CHECK(json::parse(gen->body)["entries"][0][3].get<double>() == 2.25);
  CHECK(cli.Get("/api/generate?family=fpc&x=2.25&n=99")->status == 400);

  auto pre = cli.Options("/api/analyze");
  CHECK(pre->status == 204);
}

TEST_CASE("service/library parity") {
  RunningServer server;
  auto cli = server.client();
  Rng rng(4242);
  const RITable ri = RITable::defaults();
  for (int s = 0; s < 100; ++s) {
    const PCMatrix m = random_reciprocal(3 + rng.index(6), rng);
    auto res = cli.Post("/api/analyze", to_json(m, 17).dump(), "application/json");
    REQUIRE(res);
    REQUIRE(res->status == 200);
    const json j = json::parse(res->body);
    const IndicatorReport lib = analyze(m, ri);
    REQUIRE(close12(j["kii"].get<double>(), lib.worst->value));
    REQUIRE(close12(j["chain_ii"].get<double>(), *lib.chain));
    REQUIRE(close12(j["lambda_max"].get<double>(), lib.lambda_max));
    REQUIRE(close12(j["ci"].get<double>(), lib.ci));
    REQUIRE((lib.cr ? close12(j["cr"].get<double>(), *lib.cr) : j["cr"].is_null()));
    REQUIRE(j["consistent"].get<bool>() == lib.consistent);
    REQUIRE(j["worst_triad"]["i"].get<std::size_t>() == lib.worst->triad.i + 1);
    REQUIRE(j["worst_triad"]["j"].get<std::size_t>() == lib.worst->triad.j + 1);
    REQUIRE(j["worst_triad"]["k"].get<std::size_t>() == lib.worst->triad.k + 1);
    for (std::size_t i = 0; i < m.size(); ++i) REQUIRE(close12(j["weights"][i].get<double>(), lib.weights[i]));
    const auto all = triads(m);
    REQUIRE(j["triad_heat"].size() == all.size());
    for (std::size_t t = 0; t < all.size(); ++t) REQUIRE(close12(j["triad_heat"][t]["ii"].get<double>(), triad_ii(all[t])));
  }
}
