#include "su3braid/recoupling.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace su3braid {

namespace {

std::string triple_text(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Cyclo sign(int exponent, int order) {
  return Cyclo(Rational(exponent % 2 == 0 ? 1 : -1), order);
}

}  // namespace

std::vector<int> TheoryParams::labels() const {
  std::vector<int> out(k + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Cyclo TheoryParams::a_power(long m) const { return root_of_unity(order, a_exponent * m); }

TheoryParams theory(int r) {
  if (r < 3) throw InvalidLevel("r must be >= 3, got " + std::to_string(r));
  TheoryParams t;
  t.r = r;
  t.k = r - 2;
  t.order = std::lcm(4 * r, 72);
  t.a_exponent = static_cast<long>(r - 1) * (t.order / (4 * r));
  t.A = t.a_power(1);
  t.d = -(t.a_power(2) + t.a_power(-2));

  const Cyclo denom_inv = inv(t.a_power(2) - t.a_power(-2));
  t.qints.reserve(2 * r);
  for (int n = 0; n < 2 * r; ++n) {
    t.qints.push_back((t.a_power(2L * n) - t.a_power(-2L * n)) * denom_inv);
  }
  return t;
}

Cyclo quantum_int(const TheoryParams& t, int n) {
  const int period = 2 * t.r;
  return t.qints[((n % period) + period) % period];
}

Cyclo quantum_fact(const TheoryParams& t, int n) {
  if (n < 0) throw std::invalid_argument("quantum factorial of a negative integer");
  Cyclo f(Rational(1), t.order);
  for (int i = 2; i <= n; ++i) f *= quantum_int(t, i);
  return f;
}

Cyclo delta_n(const TheoryParams& t, int n) {
  return sign(n, t.order) * quantum_int(t, n + 1);
}

bool admissible(const TheoryParams& t, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (c > a + b || b > a + c || a > b + c) return false;
  return a + b + c <= 2 * t.k;
}

VertexExponents vertex_exponents(const TheoryParams& t, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) {
    throw InadmissibleTriple(triple_text(a, b, c) + ": labels must be nonnegative");
  }
  if ((a + b + c) % 2 != 0) throw InadmissibleTriple(triple_text(a, b, c) + ": a+b+c is odd");
  if (c > a + b || b > a + c || a > b + c) {
    throw InadmissibleTriple(triple_text(a, b, c) + ": triangle inequality fails");
  }
  if (a + b + c > 2 * t.k) {
    throw InadmissibleTriple(triple_text(a, b, c) + ": a+b+c exceeds 2k = " +
                             std::to_string(2 * t.k));
  }
  return {(a + c - b) / 2, (a + b - c) / 2, (b + c - a) / 2};
}

Cyclo r_value(const TheoryParams& t, int a, int b, int c) {
  vertex_exponents(t, b, c, a);
  const long twice = static_cast<long>(b) * (b + 2) + static_cast<long>(c) * (c + 2) -
                     static_cast<long>(a) * (a + 2);
  return sign((b + c - a) / 2, t.order) * t.a_power(twice / 2);
}

Cyclo theta(const TheoryParams& t, int a, int b, int c) {
  const auto [m, n, p] = vertex_exponents(t, a, b, c);
  const Cyclo num = quantum_fact(t, m + n + p + 1) * quantum_fact(t, m) * quantum_fact(t, n) *
                    quantum_fact(t, p);
  const Cyclo den = quantum_fact(t, m + n) * quantum_fact(t, n + p) * quantum_fact(t, m + p);
  return sign(m + n + p, t.order) * num / den;
}

Cyclo tet(const TheoryParams& t, int a, int b, int e, int c, int d, int f) {
  vertex_exponents(t, a, d, e);
  vertex_exponents(t, b, c, e);
  vertex_exponents(t, a, b, f);
  vertex_exponents(t, c, d, f);

  const std::array<int, 4> lo{(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2};
  const std::array<int, 3> hi{(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};

  Cyclo inner(Rational(1), t.order);
  for (int x : lo) {
    for (int y : hi) inner *= quantum_fact(t, y - x);
  }
  const Cyclo edges = quantum_fact(t, a) * quantum_fact(t, b) * quantum_fact(t, c) *
                      quantum_fact(t, d) * quantum_fact(t, e) * quantum_fact(t, f);

  Cyclo sum(Rational(0), t.order);
  const int s_min = *std::max_element(lo.begin(), lo.end());
  const int s_max = *std::min_element(hi.begin(), hi.end());
  for (int s = s_min; s <= s_max; ++s) {
    Cyclo den(Rational(1), t.order);
    for (int x : lo) den *= quantum_fact(t, s - x);
    for (int y : hi) den *= quantum_fact(t, y - s);
    sum += sign(s, t.order) * quantum_fact(t, s + 1) / den;
  }
  return inner / edges * sum;
}

Cyclo sixj(const TheoryParams& t, int a, int b, int k, int c, int d, int i) {
  vertex_exponents(t, a, d, i);
  vertex_exponents(t, c, b, k);
  const Cyclo th1 = theta(t, a, d, i);
  const Cyclo th2 = theta(t, c, b, k);
  if (th1.is_zero() || th2.is_zero()) {
    throw ZeroDenominator("theta net vanishes in the 6j-symbol denominator");
  }
  return tet(t, a, b, k, c, d, i) * delta_n(t, i) / (th1 * th2);
}

}  // namespace su3braid
