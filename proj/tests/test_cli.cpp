#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "nckc/cli.hpp"
#include "nckc/scattering.hpp"
#include "nckc/spectrum.hpp"
#include "nckc/wavefields.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nckc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = nckc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("spectrum: envelope and energies") {
  const Run r = run({"spectrum", "--s", "0,0,0", "--gamma", "1", "--jmax", "2"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "spectrum");
  CHECK(j["channel"]["borderline"] == true);
  CHECK(j["payload"].size() == 3);
  CHECK(std::abs(j["payload"][1]["energy"].get<double>() + 0.0408163265306122) < 1e-15);
  CHECK(std::abs(j["payload"][2]["energy"].get<double>() + 0.0246913580246913) < 1e-15);
  CHECK(!j["provenance"]["equations"].empty());
  // round trip is exact
  const nckc::ChannelSpec c{0, 0, 0, 1.0};
  for (int k = 0; k <= 2; ++k) CHECK(j["payload"][k]["energy"].get<double>() == nckc::bound_energy(c, k));
}

TEST_CASE("spectrum: single row for (1,1,1) at jmax 3, exit codes") {
  const auto j = parse(run({"spectrum", "--s", "1,1,1", "--gamma", "1", "--jmax", "3"}));
  CHECK(j["payload"].size() == 1);
  CHECK(j["payload"][0]["degeneracy"] == 1);
  CHECK(j["channel"].contains("borderline") == false);
  CHECK(run({"spectrum", "--s", "1,1", "--jmax", "3"}).code == 2);
  CHECK(run({"spectrum", "--s", "1,1,-1", "--jmax", "3"}).code == 2);
  CHECK(run({"spectrum", "--s", "1,1,1", "--jmax", "2"}).code == 3);
  CHECK(run({"spectrum", "--s", "1,1,1", "--jmax", "3", "--format", "xml"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("wavefunction: grid values equal library calls, ambiguity lists candidates") {
  const Run r = run({"wavefunction", "--s", "0,0,0", "--j", "4", "--l", "2", "--m", "2", "--r",
                     "0.5:60:80", "--theta", "0.3:1.2:3", "--phi", "0.4:0.4:1"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  const nckc::ChannelSpec c{0, 0, 0, 1.0};
  const auto q = nckc::make_quantum_numbers(c, 4, 2, 2);
  CHECK(j["payload"].size() == 240);
  int changes = 0;
  double prev = 0.0;
  for (const auto& row : j["payload"]) {
    const double rr = row["r"], t = row["theta"], p = row["phi"];
    CHECK(row["psi"].get<double>() == nckc::full_wavefunction(c, q, rr, {t, p}));
    if (t == 0.3) {
      const double v = row["radial"];
      if (prev != 0.0 && (v > 0) != (prev > 0)) ++changes;
      prev = v;
    }
  }
  CHECK(changes == 2);  // j - l

  const Run amb = run({"wavefunction", "--s", "0,0,0", "--j", "2"});
  CHECK(amb.code == 2);
  CHECK(amb.err.find("candidates") != std::string::npos);
  CHECK(run({"wavefunction", "--s", "0,0,0", "--j", "0", "--theta", "2:2:1"}).code == 2);
}

TEST_CASE("wavefunction: ground state of (0,0,0) decays monotonically past the peak") {
  const auto j = parse(run({"wavefunction", "--s", "0,0,0", "--j", "0", "--r", "4:40:50"}));
  double prev = 1e300;
  for (const auto& row : j["payload"]) {
    const double v = row["radial"];
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("smatrix: unit modulus, rho = 1 phases, csv") {
  const Run r = run({"smatrix", "--s", "1,1,1", "--gamma", "2", "--energy", "2", "--lmax", "12"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  for (const auto& row : j["payload"]) {
    CHECK(std::abs(row["modulus"].get<double>() - 1.0) < 1e-12);
    const int l = row["l"];
    CHECK(row["phase"].get<double>() == std::arg(nckc::partial_wave_element(1.0, l)));
  }
  // mpmath: arg A_0 at rho = 1
  CHECK(std::abs(j["payload"][0]["phase"].get<double>() - 1.480287193998177889) < 1e-14);
  const Run csv = run({"smatrix", "--s", "1,1,1", "--energy", "0.5", "--format", "csv"});
  CHECK(csv.out.rfind("l,re,im,modulus,phase\n", 0) == 0);
  const Run low = run({"smatrix", "--s", "0,0,0", "--gamma", "1e-12", "--energy", "1", "--lmax", "3"});
  for (const auto& row : parse(low)["payload"]) CHECK(std::abs(row["phase"].get<double>()) < 1e-10);
  CHECK(run({"smatrix", "--s", "1,1,1", "--energy", "0"}).code == 2);
  CHECK(run({"smatrix", "--s", "1,1,1", "--energy", "-2"}).code == 2);
}

TEST_CASE("amplitude: metadata, swap symmetry, errors") {
  const Run r = run({"amplitude", "--s", "1,1,1", "--energy", "0.5", "--in-dir", "0.6,0.7",
                     "--out-dir", "1.1,0.4", "--lmax", "300", "--swap"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  REQUIRE(j["payload"].size() == 2);
  CHECK(j["payload"][0]["abel"].size() == 4);
  const double re0 = j["payload"][0]["re"], re1 = j["payload"][1]["re"];
  const double im0 = j["payload"][0]["im"], im1 = j["payload"][1]["im"];
  CHECK(std::abs(re0 - re1) < 1e-12 * std::abs(re0));
  CHECK(std::abs(im0 - im1) < 1e-12 * std::abs(re0));

  CHECK(run({"amplitude", "--s", "1,1,1", "--energy", "0.5", "--in-dir", "0.6,0.7", "--out-dir",
             "0.6,0.7"}).code == 3);
  CHECK(run({"amplitude", "--s", "1,1,1", "--energy", "0.5", "--in-dir", "0.6,x", "--out-dir",
             "0.6,0.7"}).code == 2);
  CHECK(run({"amplitude", "--s", "1,1,1", "--energy", "0.5", "--in-dir", "0.6,1.9", "--out-dir",
             "0.6,0.7"}).code == 2);
  CHECK(run({"amplitude", "--s", "1,1,1", "--energy", "0.5", "--in-dir", "0.6,0.7", "--out-dir",
             "1.1,0.4", "--method", "series"}).code == 2);
}

TEST_CASE("validate: suite selection and tolerance override") {
  const Run r = run({"validate", "--suite", "gram"});
  REQUIRE(r.code == 0);
  const auto j = parse(r);
  for (const auto& row : j["payload"]) CHECK(row["suite"] == "gram");

  const Run t = run({"validate", "--suite", "smatrix", "--tol", "smatrix.unitarity=1e-20"});
  CHECK(t.code == 4);
  const auto jt = parse(t);
  CHECK(jt["payload"][0]["tolerance"].get<double>() == 1e-20);
  CHECK(jt["payload"][0]["passed"] == false);
  CHECK(jt["payload"][1]["passed"] == true);
  CHECK(run({"validate", "--suite", "nope"}).code == 2);

  const Run csv = run({"validate", "--suite", "gram", "--format", "csv"});
  CHECK(csv.out.find("gram,\"orthonormality (1,1,1;1)\",") != std::string::npos);
}

TEST_CASE("determinism in process") {
  const std::vector<std::string> args{"spectrum", "--s", "1,0,2", "--gamma", "0.3", "--jmax", "9"};
  CHECK(run(args).out == run(args).out);
}
