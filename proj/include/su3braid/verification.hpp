#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "su3braid/matgroup.hpp"

namespace su3braid {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::optional<nlohmann::json> witness;
};

// Ordered checklist; `overall` is the conjunction of every `passed`.
struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;

  const CheckResult* find(const std::string& id) const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;
};

// Stable check ids, in execution order.
const std::vector<std::string>& check_ids();

struct VerificationInputs {
  UnitaryMatrix g1;
  UnitaryMatrix g2;
  std::size_t cap = kDefaultClosureCap;

  // The braid generators at level 4, charge 2, normalized by e^{i pi/9}.
  static VerificationInputs defaults();
};

VerificationReport run_theorem1_verification();
VerificationReport run_theorem1_verification(const VerificationInputs& inputs);

// Closed forms of the level-4 matrices, written out by hand and independent
// of the recoupling construction. t = (sqrt2 / 2) e^{2 i pi / 3}.
namespace reference {
Cyclo t_value();
Matrix g1();
Matrix g2();
Matrix f_matrix();
Matrix t3();
// T1, T3 T1 T3, T1 T3, T3 T1, in that order.
std::array<Matrix, 4> h_nondiagonal();
}  // namespace reference

}  // namespace su3braid
