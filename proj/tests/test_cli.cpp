#include <cmath>
#include <complex>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "gqs/cli.hpp"

using json = nlohmann::json;
using gqs::cli::execute;

namespace {

json out_of(const gqs::cli::Result& res) { return json::parse(res.output); }

}  // namespace

TEST_CASE("check accepts the vacuum and reports the boundary data") {
  const auto res = execute(R"({"command":"check","payload":{"S":[[0.5,0],[0,0.5]]}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(doc["member"] == true);
  CHECK(doc["extreme"] == true);
  REQUIRE(doc["d"].size() == 1);
  CHECK(std::abs(doc["d"][0].get<double>() - 0.5) <= 1e-12);
  CHECK(std::abs(doc["min_eig_complex"].get<double>()) <= 1e-12);
  CHECK(doc["tol"]["sym"] == 1e-9);
}

TEST_CASE("check rejects the quarter identity with exit code 2") {
  const auto res = execute(R"({"command":"check","payload":{"S":[[0.25,0],[0,0.25]]}})");
  CHECK(res.exit_code == 2);
  const json doc = out_of(res);
  CHECK(doc["member"] == false);
  CHECK(std::abs(doc["min_eig_complex"].get<double>() + 0.5) <= 1e-12);
  CHECK_FALSE(res.diagnostic.empty());
}

TEST_CASE("williamson returns the canonical diagonal of diag(1, 4)") {
  const auto res = execute(R"({"command":"williamson","payload":{"A":[[1,0],[0,4]]}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  REQUIRE(doc["d"].size() == 1);
  CHECK(std::abs(doc["d"][0].get<double>() - 2.0) <= 1e-12);
  CHECK(doc["residual"].get<double>() <= 1e-12);
  // M is 2x2 and symplectic: for n = 1 that means det M = 1.
  const auto& m = doc["M"];
  const double det = m[0][0].get<double>() * m[1][1].get<double>() -
                     m[0][1].get<double>() * m[1][0].get<double>();
  CHECK(std::abs(det - 1.0) <= 1e-12);
}

TEST_CASE("williamson refuses indefinite input with a domain error") {
  const auto res = execute(R"({"command":"williamson","payload":{"A":[[1,0],[0,-1]]}})");
  CHECK(res.exit_code == 2);
  const json doc = out_of(res);
  CHECK(doc.contains("error"));
  CHECK_FALSE(doc.contains("report"));
}

TEST_CASE("decompose refuses non-members and attaches the report") {
  const auto res =
      execute(R"({"command":"decompose","payload":{"S":[[0.25,0],[0,0.25]]}})");
  CHECK(res.exit_code == 2);
  const json doc = out_of(res);
  CHECK(doc.contains("error"));
  CHECK(doc["report"]["member"] == false);
}

TEST_CASE("decompose splits the identity covariance") {
  const auto res = execute(R"({"command":"decompose","payload":{"S":[[1,0],[0,1]]}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(doc["residual"].get<double>() <= 1e-12);
  CHECK(doc["L"].size() == 2);
  CHECK(doc["M"].size() == 2);
}

TEST_CASE("schema violations exit with code 1 and empty output") {
  for (const char* bad : {
           "{nope",
           R"({"command":"frobnicate","payload":{}})",
           R"({"command":"check","payload":{"S":[[0.5,0],[0,0.5]]},"extra":1})",
           R"({"command":"check","payload":{"S":[[0.5,0],[0,0.5]]},"tolerances":{"psd":1}})",
           R"({"command":"check","payload":{"S":[[0.5,0],[0,0.5]],"junk":true}})",
           R"({"command":"check","payload":[1,2]})",
           R"({"command":"check","payload":{"S":[[0.5,0,0],[0,0.5,0]]}})",
           R"({"payload":{"S":[[0.5,0],[0,0.5]]}})",
           R"({"command":"state spectrum","payload":{"state":{"l":[0],"m":[0],"S":[[1,0],[0,1]]},"k":0}})",
           R"({"command":"oracle chf","payload":{"rho":{"kind":"thermal","s":1.0},"cutoff":40,"alpha":[[0.1,0],[0.2,0]]}})",
           R"({"command":"oracle chf","payload":{"rho":{"kind":"thermal","s":1.0},"cutoff":500,"alpha":[[0.1,0]]}})",
       }) {
    const auto res = execute(bad);
    CHECK(res.exit_code == 1);
    CHECK(res.output.empty());
    CHECK_FALSE(res.diagnostic.empty());
  }
}

TEST_CASE("the symmetry tolerance can be widened per call") {
  const std::string text =
      R"({"command":"check","payload":{"S":[[0.6,1e-6],[0,0.6]]}})";
  CHECK(execute(text).exit_code == 2);

  const std::string loose =
      R"({"command":"check","payload":{"S":[[0.6,1e-6],[0,0.6]]},"tolerances":{"sym":1e-3}})";
  CHECK(execute(loose).exit_code == 0);

  // A command-line override wins over the envelope.
  CHECK(execute(loose, 1e-12).exit_code == 2);
  CHECK(execute(text, 1e-3).exit_code == 0);
}

TEST_CASE("state chf evaluates the vacuum Gaussian") {
  const auto res = execute(
      R"({"command":"state chf","payload":{"state":{"l":[0],"m":[0],"S":[[0.5,0],[0,0.5]]},"alpha":[[0.3,0.4]]}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(std::abs(doc["chf"][0].get<double>() - std::exp(-0.125)) <= 1e-13);
  CHECK(std::abs(doc["chf"][1].get<double>()) <= 1e-15);
}

TEST_CASE("state spectrum lists the geometric weights of the unit thermal state") {
  const auto res = execute(
      R"({"command":"state spectrum","payload":{"state":{"l":[0],"m":[0],"S":[[1,0],[0,1]]},"k":3}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(std::abs(doc["s_params"][0].get<double>() - std::log(3.0)) <= 1e-12);
  CHECK(doc["pure_modes"] == 0);
  REQUIRE(doc["eigenvalues"].size() == 3);
  for (int k = 0; k < 3; ++k) {
    const auto& entry = doc["eigenvalues"][k];
    CHECK(entry["k"] == json::array({k}));
    CHECK(std::abs(entry["value"].get<double>() -
                   (2.0 / 3.0) * std::pow(1.0 / 3.0, k)) <= 1e-13);
  }
}

TEST_CASE("state entropy reports the unit thermal values") {
  const auto res = execute(
      R"({"command":"state entropy","payload":{"state":{"l":[0],"m":[0],"S":[[1,0],[0,1]]}}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  const double want = 1.5 * std::log(1.5) - 0.5 * std::log(0.5);
  CHECK(std::abs(doc["entropy"].get<double>() - want) <= 1e-12);
  CHECK(std::abs(doc["purity"].get<double>() - 0.5) <= 1e-12);
}

TEST_CASE("state wave rejects mixed states through the domain path") {
  const auto res = execute(
      R"({"command":"state wave","payload":{"state":{"l":[0],"m":[0],"S":[[1,0],[0,1]]}}})");
  CHECK(res.exit_code == 2);
  CHECK(out_of(res).contains("error"));

  const auto pure = execute(
      R"({"command":"state wave","payload":{"state":{"l":[0.2],"m":[-0.1],"S":[[0.5,0],[0,0.5]]}}})");
  REQUIRE(pure.exit_code == 0);
  const json doc = out_of(pure);
  CHECK(doc["residual"].get<double>() <= 1e-10);
  CHECK(std::abs(doc["lambdas"][0].get<double>() - 1.0) <= 1e-10);
  CHECK(std::abs(doc["alpha"][0][0].get<double>() + 0.1 / std::sqrt(2.0)) <= 1e-13);
  CHECK(std::abs(doc["alpha"][0][1].get<double>() - 0.2 / std::sqrt(2.0)) <= 1e-13);
}

TEST_CASE("act displaces the vacuum") {
  const auto res = execute(
      R"({"command":"act","payload":{"g":{"phase":[1,0],"alpha":[[0.1,0.2]],"L":[[1,0],[0,1]]},"state":{"l":[0],"m":[0],"S":[[0.5,0],[0,0.5]]}}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  const double rt2 = std::sqrt(2.0);
  CHECK(std::abs(doc["l"][0].get<double>() - rt2 * 0.2) <= 1e-13);
  CHECK(std::abs(doc["m"][0].get<double>() - rt2 * 0.1) <= 1e-13);
  CHECK(std::abs(doc["S"][0][0].get<double>() - 0.5) <= 1e-13);

  const auto bad = execute(
      R"({"command":"act","payload":{"g":{"phase":[0.9,0],"alpha":[[0,0]],"L":[[1,0],[0,1]]},"state":{"l":[0],"m":[0],"S":[[0.5,0],[0,0.5]]}}})");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("compose carries the Weyl phase") {
  const auto res = execute(
      R"({"command":"compose","payload":{"g1":{"phase":[1,0],"alpha":[[0.7,-0.2]],"L":[[1,0],[0,1]]},"g2":{"phase":[1,0],"alpha":[[-0.3,0.5]],"L":[[1,0],[0,1]]}}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  const std::complex<double> a(0.7, -0.2), b(-0.3, 0.5);
  const std::complex<double> want =
      std::exp(std::complex<double>(0.0, -std::imag(std::conj(a) * b)));
  CHECK(std::abs(doc["phase"][0].get<double>() - want.real()) <= 1e-13);
  CHECK(std::abs(doc["phase"][1].get<double>() - want.imag()) <= 1e-13);
  CHECK(std::abs(doc["alpha"][0][0].get<double>() - 0.4) <= 1e-13);
  CHECK(std::abs(doc["alpha"][0][1].get<double>() - 0.3) <= 1e-13);
}

TEST_CASE("purify returns a two-mode pure extension") {
  const auto res = execute(
      R"({"command":"purify","payload":{"state":{"l":[0],"m":[0],"S":[[1,0],[0,1]]}}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(doc["pure_state"]["S"].size() == 4);
  CHECK(doc["marginal_residual"].get<double>() <= 1e-10);
  CHECK(doc["symmetry"]["L"].size() == 4);
  // The kept marginal sits in the upper-left of each quadrant.
  CHECK(std::abs(doc["pure_state"]["S"][0][0].get<double>() - 1.0) <= 1e-10);
}

TEST_CASE("oracle chf evaluates recipe states") {
  const auto res = execute(
      R"({"command":"oracle chf","payload":{"rho":{"kind":"thermal","s":1.0986122886681098},"cutoff":60,"alpha":[[0.5,0.4]]}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  CHECK(doc["trace_ok"] == true);
  CHECK(doc["range_flag"] == false);
  CHECK(std::abs(doc["value"][0].get<double>() - std::exp(-0.41)) <= 1e-7);
  CHECK(std::abs(doc["value"][1].get<double>()) <= 1e-7);
}

TEST_CASE("oracle spectrum descends and flags deep squeezing") {
  const auto res = execute(
      R"({"command":"oracle spectrum","payload":{"rho":{"kind":"thermal","s":1.0986122886681098},"cutoff":30,"k":3}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  REQUIRE(doc["eigenvalues"].size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(doc["eigenvalues"][k].get<double>() -
                   (2.0 / 3.0) * std::pow(1.0 / 3.0, k)) <= 1e-12);

  const auto flagged = execute(
      R"({"command":"oracle spectrum","payload":{"rho":{"kind":"squeezed","r":0.7,"phi":0},"cutoff":30,"k":1}})");
  REQUIRE(flagged.exit_code == 0);
  CHECK(out_of(flagged)["range_flag"] == true);
  CHECK(std::abs(out_of(flagged)["eigenvalues"][0].get<double>() - 1.0) <= 1e-10);
}

TEST_CASE("oracle ptrace contracts a product state") {
  const auto res = execute(
      R"({"command":"oracle ptrace","payload":{"rho":{"kind":"product","a":{"kind":"thermal","s":1.0986122886681098},"b":{"kind":"vacuum"}},"cutoff":6,"keep":2}})");
  REQUIRE(res.exit_code == 0);
  const json doc = out_of(res);
  const double thermal_trace = 1.0 - std::pow(3.0, -7.0);
  CHECK(std::abs(doc["rho"][0][0][0].get<double>() - thermal_trace) <= 1e-12);
  CHECK(std::abs(doc["rho"][1][1][0].get<double>()) <= 1e-14);
  CHECK(std::abs(doc["trace"].get<double>() - thermal_trace) <= 1e-12);

  const auto bad = execute(
      R"({"command":"oracle ptrace","payload":{"rho":{"kind":"vacuum"},"cutoff":6,"keep":1}})");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("output is deterministic across repeated runs") {
  const std::string text =
      R"({"command":"purify","payload":{"state":{"l":[0.3],"m":[-0.2],"S":[[1.2,0.1],[0.1,0.9]]}}})";
  const auto a = execute(text);
  const auto b = execute(text);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.back() == '\n');
}
