#include "su3braid/su3families.hpp"

#include <numeric>
#include <string>

namespace su3braid {

namespace {

void validate(const CParams& p) {
  if (p.n < 1) throw InvalidParameters("n must be positive");
  if (p.a < 0 || p.a >= p.n || p.b < 0 || p.b >= p.n) {
    throw InvalidParameters("a and b must lie in [0, n-1]");
  }
}

void validate(const DParams& p) {
  validate(p.c);
  if (p.d < 1) throw InvalidParameters("d must be positive");
  if (p.r < 0 || p.r >= p.d || p.s < 0 || p.s >= p.d) {
    throw InvalidParameters("r and s must lie in [0, d-1]");
  }
}

int pick_order(int minimal, int requested) {
  if (requested == 0) return minimal;
  if (requested % minimal != 0) {
    throw NonDivisibleOrder("order " + std::to_string(requested) + " is not a multiple of " +
                            std::to_string(minimal));
  }
  return requested;
}

// e^{2 i pi k / n} written in Q(zeta_order).
Cyclo unit(int n, long k, int order) { return embed(root_of_unity(n, k), order); }

}  // namespace

int family_order(const CParams& p) { return std::lcm(p.n, 4); }

int family_order(const DParams& p) { return std::lcm(std::lcm(p.c.n, p.d), 4); }

std::vector<UnitaryMatrix> c_generators(const CParams& p, int order) {
  validate(p);
  const int m = pick_order(family_order(p), order);
  const Cyclo zero(Rational(0), m);
  const Cyclo one(Rational(1), m);
  // Permutation matrix of the cycle (1,3,2).
  const Matrix e{{zero, one, zero}, {zero, zero, one}, {one, zero, zero}};
  const Matrix f = Matrix::diagonal(
      {unit(p.n, p.a, m), unit(p.n, p.b, m), unit(p.n, -static_cast<long>(p.a) - p.b, m)});
  return {UnitaryMatrix::checked(e), UnitaryMatrix::checked(f)};
}

std::vector<UnitaryMatrix> d_generators(const DParams& p, int order) {
  validate(p);
  const int m = pick_order(family_order(p), order);
  auto gens = c_generators(p.c, m);
  const Cyclo zero(Rational(0), m);
  const Matrix extra{{unit(p.d, p.r, m), zero, zero},
                     {zero, zero, unit(p.d, p.s, m)},
                     {zero, -unit(p.d, -static_cast<long>(p.r) - p.s, m), zero}};
  gens.push_back(UnitaryMatrix::checked(extra));
  return gens;
}

}  // namespace su3braid
