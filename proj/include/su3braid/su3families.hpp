#pragma once

#include <vector>

#include "su3braid/matrix.hpp"

namespace su3braid {

// C(n, a, b) = <E, F(n, a, b)>
struct CParams {
  int n = 1;
  int a = 0;
  int b = 0;
};

// D(n, a, b; d, r, s) adds one more generator to C(n, a, b).
struct DParams {
  CParams c;
  int d = 1;
  int r = 0;
  int s = 0;
};

// Smallest order holding every entry: lcm(n, d, 4).
int family_order(const CParams& p);
int family_order(const DParams& p);

// [E, F]. `order` = 0 picks family_order; otherwise it must be a multiple.
std::vector<UnitaryMatrix> c_generators(const CParams& p, int order = 0);
// [E, F, D].
std::vector<UnitaryMatrix> d_generators(const DParams& p, int order = 0);

}  // namespace su3braid
