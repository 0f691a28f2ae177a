// One PASS/FAIL line per acceptance criterion. Every equality is exact; the
// only tolerance is the 1e-9 float-embedding bound in the property sweep and
// the 60 s runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "su3braid/serialize.hpp"
#include "su3braid/verification.hpp"
#include "support.hpp"

using namespace su3braid;

namespace {

constexpr double kFloatTolerance = 1e-9;
constexpr double kRuntimeBudgetSeconds = 60.0;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> check_ids;
};

const std::vector<Criterion> kCriteria{
    {1, "loop values at level 4", {"TL-DELTAS"}},
    {2, "conjugated R-values", {"TL-RVALUES"}},
    {3, "tet table and theta identity", {"TL-TET-TABLE", "TL-THETA-ID"}},
    {4, "generator matrices match the displayed forms", {"REP-G1", "REP-G2"}},
    {5, "braid relation, commuting squares, order 18, spectra",
     {"REP-BRAID", "REP-SQUARES-COMMUTE", "REP-ORDER18", "REP-CHARPOLY"}},
    {6, "group order 162", {"GRP-ORDER-162"}},
    {7, "F matrix and A", {"GRP-F-MATRIX", "GRP-A-DEF"}},
    {8, "N = Z9 x Z3", {"GRP-AB-ORDERS", "GRP-AB-COMMUTE", "GRP-CYCLIC-INTERSECT", "GRP-N-INVARIANTS"}},
    {9, "N normal and conjugation identities",
     {"GRP-N-NORMAL", "GRP-G1AG1-G2SQ", "GRP-G2SQ-A7B2", "GRP-G2AG2-AB"}},
    {10, "involutions and H = S3",
     {"GRP-T1T2T3", "GRP-H-S3", "GRP-H-MATRICES", "GRP-HN-TRIVIAL", "GRP-ORDER3-NOT-IN-LIST"}},
    {11, "involution factorizations", {"GRP-G2SQG1-FACTOR", "GRP-G1SQG2-FACTOR"}},
    {12, "semidirect decomposition", {"GRP-PSI-G1", "GRP-PSI-G2", "GRP-SEMIDIRECT"}},
    {13, "presentation relations", {"GRP-PRESENTATION"}},
    {14, "isomorphism with D(9,1,1;2,1,1)", {"GRP-D-FAMILY-ORDER", "GRP-ISO-D91211"}},
};

// Fixed-seed sweeps over the invariants; returns the first failure, if any.
std::string property_sweep() {
  std::mt19937 rng(testsupport::kSeed);

  for (int order : {9, 24, 72}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Cyclo x = testsupport::random_cyclo(rng, order);
      const Cyclo y = testsupport::random_cyclo(rng, order);
      const Cyclo z = testsupport::random_cyclo(rng, order);
      if (!((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z)) {
        return "field axioms";
      }
      if (!x.is_zero() && !(x * inv(x)).is_one()) return "field inverse";
      if (!(conj(x * y) == conj(x) * conj(y)) || !(conj(conj(x)) == x)) return "conjugation";
      if (std::abs(to_float(x + y) - (to_float(x) + to_float(y))) > kFloatTolerance) return "float embedding";
    }
  }

  const auto& bg = testsupport::BraidGroup::get();
  const auto& g = bg.group;
  for (const auto& e : g.elements()) {
    if (!e.matrix.matrix().is_unitary()) return "unitarity";
    if (!e.matrix.matrix().determinant().is_one()) return "determinant";
    if (!(word_eval(*e.word, g.generators()).matrix == e.matrix)) return "word provenance";
  }

  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sub = subgroup(g, {g[pick(rng)], g[pick(rng)]});
    if (g.order() % sub.order() != 0) return "Lagrange";
  }

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : g.elements()) {
    auto [n, h] = decompose(e.matrix, bg.normal, bg.complement);
    pairs.emplace(n.key, h.key);
  }
  if (pairs.size() != g.order()) return "decomposition bijection";

  const std::string first = elements_to_json(g, {"G1", "G2"}).dump(1) + cayley_csv(g);
  const auto again = close({bg.g1, bg.g2});
  if (elements_to_json(again, {"G1", "G2"}).dump(1) + cayley_csv(again) != first) return "export determinism";
  return {};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport report = run_theorem1_verification();
  bool all = true;

  for (const auto& c : kCriteria) {
    std::string failed;
    for (const auto& id : c.check_ids) {
      const CheckResult* r = report.find(id);
      if (r == nullptr || !r->passed) failed += (failed.empty() ? "" : ",") + id;
    }
    const bool ok = failed.empty();
    all = all && ok;
    std::printf("criterion %2d %s  %s", c.number, ok ? "PASS" : "FAIL", c.title.c_str());
    if (!ok) std::printf("  [failed: %s]", failed.c_str());
    std::printf("\n");
  }

  std::string failure;
  try {
    failure = property_sweep();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  all = all && failure.empty();
  std::printf("criterion 15 %s  property sweeps (fixed seed %u, float tolerance %g)", failure.empty() ? "PASS" : "FAIL",
              testsupport::kSeed, kFloatTolerance);
  if (!failure.empty()) std::printf("  [failed: %s]", failure.c_str());
  std::printf("\n");

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = seconds < kRuntimeBudgetSeconds;
  all = all && fast;
  std::printf("runtime %s  %.2f s (budget %.0f s)\n", fast ? "PASS" : "FAIL", seconds, kRuntimeBudgetSeconds);
  std::printf("acceptance %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
