#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "su3braid/serialize.hpp"
#include "su3braid/verification.hpp"
#include "support.hpp"

using namespace su3braid;
using testsupport::BraidGroup;

namespace {

const VerificationReport& default_report() {
  static const VerificationReport r = run_theorem1_verification();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("default verification passes every check") {
  const auto& r = default_report();
  CHECK(r.overall);
  for (const auto& c : r.checks) {
    CAPTURE(c.id);
    CHECK(c.passed);
  }
}

TEST_CASE("check ids are stable and in order") {
  const std::vector<std::string> expected{
      "TL-DELTAS",          "TL-RVALUES",         "TL-TET-TABLE",        "TL-THETA-ID",
      "REP-G1",             "REP-G2",             "REP-BRAID",           "REP-SQUARES-COMMUTE",
      "REP-ORDER18",        "REP-CHARPOLY",       "GRP-ORDER-162",       "GRP-F-MATRIX",
      "GRP-A-DEF",          "GRP-AB-ORDERS",      "GRP-AB-COMMUTE",      "GRP-CYCLIC-INTERSECT",
      "GRP-N-NORMAL",       "GRP-N-INVARIANTS",   "GRP-G1AG1-G2SQ",      "GRP-G2SQ-A7B2",
      "GRP-G2AG2-AB",       "GRP-T1T2T3",         "GRP-H-S3",            "GRP-H-MATRICES",
      "GRP-HN-TRIVIAL",     "GRP-ORDER3-NOT-IN-LIST", "GRP-G2SQG1-FACTOR", "GRP-G1SQG2-FACTOR",
      "GRP-PSI-G1",         "GRP-PSI-G2",         "GRP-SEMIDIRECT",      "GRP-PRESENTATION",
      "GRP-D-FAMILY-ORDER", "GRP-ISO-D91211"};
  CHECK(check_ids() == expected);
  std::vector<std::string> got;
  for (const auto& c : default_report().checks) got.push_back(c.id);
  CHECK(got == expected);
  CHECK(default_report().find("GRP-ORDER-162") != nullptr);
  CHECK(default_report().find("NOPE") == nullptr);
}

TEST_CASE("corrupted generator fails the braid check") {
  VerificationInputs in = VerificationInputs::defaults();
  const Matrix flip = Matrix::diagonal({Cyclo(1), Cyclo(-1), Cyclo(1)});
  in.g2 = UnitaryMatrix::checked(flip * in.g2.matrix());
  in.cap = 2000;
  const VerificationReport r = run_theorem1_verification(in);
  CHECK_FALSE(r.overall);
  REQUIRE(r.find("REP-BRAID") != nullptr);
  CHECK_FALSE(r.find("REP-BRAID")->passed);
  CHECK(r.find("TL-DELTAS")->passed);
  CHECK(r.checks.size() == check_ids().size());
}

TEST_CASE("report JSON round trip") {
  const auto& r = default_report();
  const json j = r.to_json();
  const VerificationReport back = VerificationReport::from_json(json::parse(j.dump()));
  CHECK(back.overall == r.overall);
  REQUIRE(back.checks.size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(back.checks[i].id == r.checks[i].id);
    CHECK(back.checks[i].passed == r.checks[i].passed);
    CHECK(back.checks[i].description == r.checks[i].description);
  }
  CHECK(back.to_json() == j);
  CHECK(r.to_text().find("OVERALL: PASS") != std::string::npos);
}

TEST_CASE("serialization round trips") {
  const Cyclo x = root_of_unity(72, 15) + Cyclo(make_rational(-2, 3), 72);
  const json jx = cyclo_to_json(x);
  CHECK(jx["order"] == 72);
  CHECK(jx["coeffs"].size() == 24);
  CHECK(cyclo_from_json(jx) == x);
  const Matrix m = BraidGroup::get().g2.matrix();
  const json jm = matrix_to_json(m);
  CHECK(jm["dim"] == 3);
  CHECK(jm["float_rows"][1][1][0] == 0.0);
  CHECK(matrix_from_json(jm) == m);
  CHECK(describe(Cyclo(0)).find("0") == 0);
}

TEST_CASE("property: exports are deterministic") {
  const auto dir = std::filesystem::temp_directory_path() / "su3braid_export_test";
  std::filesystem::create_directories(dir);
  const auto& g = BraidGroup::get().group;

  write_elements(g, {"G1", "G2"}, (dir / "a.json").string());
  write_cayley(g, (dir / "a.csv").string());
  // A second, independent closure must give byte-identical files.
  const auto again = close({BraidGroup::get().g1, BraidGroup::get().g2});
  write_elements(again, {"G1", "G2"}, (dir / "b.json").string());
  write_cayley(again, (dir / "b.csv").string());

  CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));

  const json records = json::parse(slurp(dir / "a.json"));
  CHECK(records.size() == 162);
  CHECK(records[0]["word"] == "I");
  const std::string csv = slurp(dir / "a.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 162);

  const auto trivial = close({UnitaryMatrix::identity(3)});
  CHECK(cayley_csv(trivial) == "0\n");
  std::filesystem::remove_all(dir);
}
