#pragma once

#include <vector>

#include "su3braid/cyclo.hpp"

namespace su3braid {

/// Level data of the Temperley-Lieb theory at r.
///
/// A = i * e^{-2 pi i / 4r} = zeta_{4r}^{r-1} and d = -A^2 - A^{-2}. All values
/// live in Q(zeta_order) with order = lcm(4r, 72), which also holds sqrt2,
/// sqrt3 and the 18th roots of unity used to normalize into SU(3).
struct TheoryParams {
  int r = 0;
  int k = 0;  // level, r - 2
  int order = 0;
  long a_exponent = 0;  // A = zeta_order^a_exponent
  Cyclo A;
  Cyclo d;
  // [n] for n in [0, 2r); quantum integers are 2r-periodic since A^{4r} = 1.
  std::vector<Cyclo> qints;

  std::vector<int> labels() const;  // 0..k
  // A^m as an exact root of unity.
  Cyclo a_power(long m) const;
};

struct VertexExponents {
  int m = 0;  // (a + c - b) / 2
  int n = 0;  // (a + b - c) / 2
  int p = 0;  // (b + c - a) / 2
};

TheoryParams theory(int r);

Cyclo quantum_int(const TheoryParams& t, int n);
Cyclo quantum_fact(const TheoryParams& t, int n);
// (-1)^n [n+1], the loop value of the closed n-strand projector.
Cyclo delta_n(const TheoryParams& t, int n);

bool admissible(const TheoryParams& t, int a, int b, int c);
// Throws InadmissibleTriple naming the violated condition.
VertexExponents vertex_exponents(const TheoryParams& t, int a, int b, int c);

// R_a^{b,c} = (-1)^{(b+c-a)/2} A^{(b(b+2) + c(c+2) - a(a+2))/2}; needs (b, c, a)
// admissible.
Cyclo r_value(const TheoryParams& t, int a, int b, int c);

Cyclo theta(const TheoryParams& t, int a, int b, int c);

// Tetrahedral net T[a b e; c d f] with vertex triples (a,d,e), (b,c,e), (a,b,f)
// and (c,d,f).
Cyclo tet(const TheoryParams& t, int a, int b, int e, int c, int d, int f);

// {a b k; c d i} = T[a b k; c d i] Delta_i / (theta(a,d,i) theta(c,b,k)).
Cyclo sixj(const TheoryParams& t, int a, int b, int k, int c, int d, int i);

}  // namespace su3braid
