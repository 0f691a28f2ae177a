#pragma once

#include <vector>

#include "su3braid/matrix.hpp"
#include "su3braid/recoupling.hpp"

namespace su3braid {

// Fusion-tree basis of four anyons of charge c with total charge 0; vector
// e_alpha is indexed by the internal edge label alpha.
struct FusionBasis {
  TheoryParams theory;
  int charge = 0;
  std::vector<int> labels;  // ascending, each with (c, c, alpha) admissible

  int dim() const { return static_cast<int>(labels.size()); }
};

FusionBasis fusion_basis(const TheoryParams& t, int charge);

// Diagonal of conjugated R-values; the image of both g1 and g3.
UnitaryMatrix sigma_odd(const FusionBasis& basis);
// Image of g3, identical to sigma_odd.
inline UnitaryMatrix sigma_outer(const FusionBasis& basis) { return sigma_odd(basis); }
// Image of the middle generator g2, built from F-move and R-move data.
UnitaryMatrix sigma_mid(const FusionBasis& basis);

// Positive real square root of x when x = s^2 m for rational s and m in
// {1, 2, 3, 6}; throws UnsupportedSurd otherwise. `order` fixes the field.
Cyclo positive_sqrt(const Cyclo& x, int order);

// phase * M, after checking phase^dim * det(M) == 1 exactly.
UnitaryMatrix su3_normalize(const UnitaryMatrix& m, const Cyclo& phase);

struct GeneratorPair {
  UnitaryMatrix g1;
  UnitaryMatrix g2;
};

// r = 6, charge 2, normalized by e^{i pi / 9}; entries in Q(zeta_72).
GeneratorPair paper_generators();

}  // namespace su3braid
