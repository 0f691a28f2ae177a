#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "su3braid/braidrep.hpp"
#include "su3braid/matgroup.hpp"

namespace testsupport {

using namespace su3braid;

inline constexpr unsigned kSeed = 20240613u;

// Random element of Q(zeta_order) with small numerators and denominators.
inline Cyclo random_cyclo(std::mt19937& rng, int order, int max_terms = 4) {
  std::uniform_int_distribution<int> exp(0, order - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::vector<Rational> poly(order);
  for (int t = terms(rng); t > 0; --t) poly[exp(rng)] += make_rational(num(rng), den(rng));
  return Cyclo::from_poly(order, std::move(poly));
}

inline bool close_to(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

inline GpElement eval_braid_word(const UnitaryMatrix& g1, const UnitaryMatrix& g2, const std::string& text) {
  const std::vector<GpElement> gens{make_element(g1, 72), make_element(g2, 72)};
  return word_eval(parse_word(text, {"G1", "G2"}), gens);
}

// The braid group image together with its named subgroups.
struct BraidGroup {
  UnitaryMatrix g1;
  UnitaryMatrix g2;
  FiniteMatrixGroup group;
  GpElement A, B, T1, T3;
  FiniteMatrixGroup normal;      // <A, B>
  FiniteMatrixGroup complement;  // <T1, T3>

  BraidGroup(const UnitaryMatrix& a, const UnitaryMatrix& b)
      : g1(a),
        g2(b),
        group(close({a, b})),
        A(eval_braid_word(a, b, "G1 G2^2 G1^-1")),
        B(eval_braid_word(a, b, "G1 G2^-2 G1")),
        T1(eval_braid_word(a, b, "G1 G2 G1")),
        T3(eval_braid_word(a, b, "(G2 G1^9 G2^-1) (G2 G1^2) (G2 G1^9 G2^-1)")),
        normal(subgroup(group, {A, B})),
        complement(subgroup(group, {T1, T3})) {}

  GpElement eval(const std::string& text) const { return eval_braid_word(g1, g2, text); }

  GpElement nh(const std::string& text) const {
    const std::vector<GpElement> gens{A, B, T1, T3};
    return word_eval(parse_word(text, {"A", "B", "T1", "T3"}), gens);
  }

  static const BraidGroup& get() {
    static const BraidGroup instance(paper_generators().g1, paper_generators().g2);
    return instance;
  }
};

}  // namespace testsupport
