#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "opbianchi/bianchi.hpp"
#include "opbianchi/quantum_bianchi.hpp"
#include "report.hpp"

using namespace opbianchi;
using opbianchi::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

BianchiType type_from_row(const report::TableRow& row) {
  const BianchiTag tag = parse_bianchi_tag(row.type);
  if (tag == BianchiTag::VIIa || tag == BianchiTag::VIa) return BianchiType::make(tag, parse_rational(*row.a));
  return BianchiType::make(tag);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"tables", "unknown"}).code == cli::kExitUsage);
  CHECK(run({"tables", "bianchi", "--format", "yaml"}).code == cli::kExitUsage);
  CHECK(run({"tables", "bianchi", "--p0", "0"}).code == cli::kExitUsage);
  CHECK(run({"tables", "bianchi", "--omega", "x"}).code == cli::kExitUsage);
  CHECK(run({"tables", "bianchi", "--type", "XI"}).code == cli::kExitUsage);
  CHECK(run({"trace", "VIa", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"trace", "II", "--t-samples", "1"}).code == cli::kExitUsage);
  CHECK(run({"trace", "II", "--t-end", "3.2"}).code == cli::kExitUsage);
  CHECK(run({"trace", "II", "--format", "text"}).code == cli::kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("verify") != std::string::npos);
  const Run ok = run({"verify", "matrix-lax", "--omega", "3"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(ok.out.find("max |residual| = 0") != std::string::npos);
}

TEST_CASE("verify all passes with eleven certificates") {
  const Run r = run({"verify", "all", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["certificates"].size() == 11);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("verify jacobi-quantum for type V") {
  const Run r = run({"verify", "jacobi-quantum", "--type", "V", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto cert = nlohmann::ordered_json::parse(r.out)["certificates"][0];
  CHECK(cert["kind"] == "AnomalousI");
  CHECK(cert["jacobian"][2] == "(1/2)*Ap*Am - (1/2)*Am*Ap");
}

TEST_CASE("tables are deterministic and round-trip through JSON") {
  for (const char* which : {"bianchi", "deformed", "quantum"}) {
    CAPTURE(which);
    const std::vector<std::string> args{"tables", which, "--format", "json", "--p0", "1/2", "--a", "3/2"};
    const Run first = run(args), second = run(args);
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == second.out);

    const auto doc = report::table_from_json(nlohmann::ordered_json::parse(first.out));
    REQUIRE(doc.rows.size() == 11);
    const Rational p0(1, 2), omega = 1;
    for (const auto& row : doc.rows) {
      const BianchiType t = type_from_row(row);
      CAPTURE(t.name());
      if (doc.table == "bianchi") {
        CHECK(report::rational_tensor(row) == structure_constants(t));
      } else if (doc.table == "deformed") {
        CHECK(report::poly_tensor(row, 2 * p0) == deform(t, omega, p0));
      } else {
        CHECK(report::quantum_tensor(row, 2 * p0) == quantize(t, omega, p0));
      }
    }
  }
  CHECK_THROWS(report::table_from_json(nlohmann::ordered_json::parse(R"({"rows": []})")));
}

TEST_CASE("table examples") {
  const Run i = run({"tables", "deformed", "--type", "I", "--format", "csv"});
  const auto rows = csv_rows(i.out);
  REQUIRE(rows.size() == 10);
  for (std::size_t n = 1; n < rows.size(); ++n) CHECK(rows[n].back() == "0");

  const Run v = run({"tables", "quantum", "--type", "V"});
  CHECK(v.out.find("mu2_12 = -(1/4)*s*Ap") != std::string::npos);
  CHECK(v.out.find("mu3_31 = (1/4)*s*Ap") != std::string::npos);
}

TEST_CASE("trace output") {
  const Run ii = run({"trace", "II"});
  REQUIRE(ii.code == cli::kExitOk);
  const auto rows = csv_rows(ii.out);
  REQUIRE(rows.size() == 101);
  CHECK(rows[0][0] == "t");
  CHECK(rows[0][8] == "mu1_23");
  CHECK(rows[1][8] == "1");
  CHECK(ii.out.find('\r') == std::string::npos);

  const Run ix = run({"trace", "IX", "--t-samples", "7"});
  const auto ixr = csv_rows(ix.out);
  for (std::size_t n = 2; n < ixr.size(); ++n)
    CHECK(std::vector(ixr[n].begin() + 5, ixr[n].end()) == std::vector(ixr[1].begin() + 5, ixr[1].end()));

  // omega t = pi/2 with inclusive sampling: mu2_12 = -cos(pi/4).
  const Run v = run({"trace", "V", "--t-samples", "2", "--t-end", "1.5707963267948966"});
  const auto vr = csv_rows(v.out);
  REQUIRE(vr.size() == 3);
  CHECK(std::stod(vr[2][6]) == doctest::Approx(-0.7071067811865476).epsilon(1e-12));
  // Row 0 reproduces the undeformed constants of V: mu2_12 = -1, mu3_31 = 1.
  CHECK(vr[1][6] == "-1");
  CHECK(vr[1][13] == "1");
}

TEST_CASE("--out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "opbianchi_cli_test.csv";
  const Run r = run({"trace", "II", "--t-samples", "3", "--out", path.string()});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"trace", "II", "--t-samples", "3"}).out);
  std::filesystem::remove(path);
}
