#include "su3braid/braidrep.hpp"

#include <array>
#include <numeric>
#include <string>

namespace su3braid {

FusionBasis fusion_basis(const TheoryParams& t, int charge) {
  if (charge < 0 || charge > t.k) {
    throw EmptyBasis("charge " + std::to_string(charge) + " is not a label at level " +
                     std::to_string(t.k));
  }
  FusionBasis basis{t, charge, {}};
  for (int alpha : t.labels()) {
    if (admissible(t, charge, charge, alpha)) basis.labels.push_back(alpha);
  }
  if (basis.labels.empty()) throw EmptyBasis("no admissible internal label");
  return basis;
}

UnitaryMatrix sigma_odd(const FusionBasis& basis) {
  std::vector<Cyclo> diag;
  for (int alpha : basis.labels) {
    diag.push_back(conj(r_value(basis.theory, alpha, basis.charge, basis.charge)));
  }
  return UnitaryMatrix::checked(Matrix::diagonal(diag));
}

Cyclo positive_sqrt(const Cyclo& x, int order) {
  if (!x.is_rational() || sgn(x.rational_part()) <= 0) {
    throw UnsupportedSurd("square root is only available for positive rationals");
  }
  // sqrt(n/d) = sqrt(n d) / d
  const Rational& q = x.rational_part();
  const mpz_class den = q.get_den();
  const mpz_class v = q.get_num() * den;
  for (long m : {1L, 2L, 3L, 6L}) {
    if (v % m != 0) continue;
    const mpz_class sq = v / m;
    if (mpz_perfect_square_p(sq.get_mpz_t()) == 0) continue;
    Rational scale(mpz_class(sqrt(sq)), den);
    scale.canonicalize();
    Cyclo surd(Rational(1), order);
    if (m == 2 || m == 6) surd *= sqrt2(order);
    if (m == 3 || m == 6) surd *= sqrt3(order);
    return Cyclo(Rational(scale), order) * surd;
  }
  throw UnsupportedSurd("square root of " + q.get_str() + " is outside the supported surds");
}

UnitaryMatrix sigma_mid(const FusionBasis& basis) {
  const TheoryParams& t = basis.theory;
  const int c = basis.charge;
  const int n = basis.dim();

  // Intermediate channels i of the F-move: (c, c, i) admissible.
  std::vector<int> channels;
  for (int i : t.labels()) {
    if (admissible(t, c, c, i)) channels.push_back(i);
  }

  std::vector<Cyclo> norm(n);
  for (int x = 0; x < n; ++x) {
    const int alpha = basis.labels[x];
    const Cyclo th = theta(t, c, c, alpha);
    if (th.is_zero()) throw ZeroDenominator("theta(c, c, alpha) vanishes");
    norm[x] = positive_sqrt(delta_n(t, alpha), t.order) / th;
  }

  std::vector<Cyclo> weight;
  for (int i : channels) {
    const Cyclo th = theta(t, c, c, i);
    if (th.is_zero()) throw ZeroDenominator("theta(c, c, i) vanishes");
    weight.push_back(delta_n(t, i) * conj(r_value(t, i, c, c)) / (th * th));
  }

  Matrix m(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      Cyclo sum(Rational(0), t.order);
      for (std::size_t j = 0; j < channels.size(); ++j) {
        const int i = channels[j];
        sum += weight[j] * tet(t, c, c, i, c, c, basis.labels[x]) *
               tet(t, c, c, i, c, c, basis.labels[y]);
      }
      m(x, y) = norm[x] * norm[y] * sum;
      m(y, x) = m(x, y);
    }
  }
  return UnitaryMatrix::checked(std::move(m));
}

UnitaryMatrix su3_normalize(const UnitaryMatrix& m, const Cyclo& phase) {
  const int order = std::lcm(m.matrix().scalar_order(), phase.order());
  const UnitaryMatrix mm = m.with_order(order);
  const Cyclo p = embed(phase, order);
  if (!(p.pow(m.dim()) * mm.matrix().determinant()).is_one()) {
    throw PhaseMismatch("phase^dim * det(M) != 1");
  }
  return mm.scaled(p);
}

GeneratorPair paper_generators() {
  const FusionBasis basis = fusion_basis(theory(6), 2);
  const Cyclo phase = root_of_unity(18, 1);
  return {su3_normalize(sigma_odd(basis), phase), su3_normalize(sigma_mid(basis), phase)};
}

}  // namespace su3braid
