#include "su3braid/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

namespace su3braid {

namespace {

using Poly = std::vector<Rational>;

// Phi_N = x^degree + sum of tail terms; reduction uses x^degree = -tail.
struct CycloPoly {
  int degree = 0;
  std::vector<mpz_class> dense;
  std::vector<std::pair<int, mpz_class>> tail;
};

std::vector<mpz_class> exact_divide(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

const CycloPoly& cyclo_poly(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloPoly>> memo;

  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(order); it != memo.end()) return *it->second;
  }

  // Built outside the lock (recursion needs the proper divisors).
  std::vector<mpz_class> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = exact_divide(std::move(poly), cyclo_poly(d).dense);
  }

  auto entry = std::make_unique<CycloPoly>();
  entry->degree = static_cast<int>(poly.size()) - 1;
  for (int i = 0; i < entry->degree; ++i) {
    if (poly[i] != 0) entry->tail.emplace_back(i, poly[i]);
  }
  entry->dense = std::move(poly);

  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(order, std::move(entry));
  return *it->second;
}

void require_order(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
}

// Fold exponents with x^N = 1, then take the remainder modulo Phi_N.
Poly reduce(int order, Poly poly) {
  const CycloPoly& phi = cyclo_poly(order);
  if (static_cast<int>(poly.size()) > order) {
    for (std::size_t i = order; i < poly.size(); ++i) {
      if (sgn(poly[i]) != 0) poly[i % order] += poly[i];
    }
    poly.resize(order);
  }
  for (int i = static_cast<int>(poly.size()) - 1; i >= phi.degree; --i) {
    if (sgn(poly[i]) == 0) continue;
    const Rational c = poly[i];
    const int shift = i - phi.degree;
    for (const auto& [j, p] : phi.tail) poly[shift + j] -= c * p;
    poly[i] = 0;
  }
  poly.resize(phi.degree, Rational(0));
  return poly;
}

// Polynomial helpers over Q used by the extended Euclidean algorithm.
void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  Poly quot;
  if (num.size() < den.size()) return {quot, num};
  quot.assign(num.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  for (std::size_t i = num.size(); i-- >= den.size();) {
    if (sgn(num[i]) == 0) continue;
    const Rational c = num[i] / lead;
    const std::size_t shift = i - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly power_image(const Cyclo& x, int target, long factor) {
  // zeta_N^i -> zeta_target^{i*factor mod target}
  Poly poly(target, Rational(0));
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    poly[(static_cast<long>(i) * factor) % target] += c[i];
  }
  return poly;
}

std::pair<Cyclo, Cyclo> promote(const Cyclo& x, const Cyclo& y) {
  if (x.order() == y.order()) return {x, y};
  if (y.order() % x.order() == 0) return {embed(x, y.order()), y};
  if (x.order() % y.order() == 0) return {x, embed(y, x.order())};
  throw OrderMismatch("no common promotion between Q(zeta_" + std::to_string(x.order()) +
                      ") and Q(zeta_" + std::to_string(y.order()) + ")");
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int order) {
  require_order(order);
  return cyclo_poly(order).dense;
}

int common_order(int a, int b) { return std::lcm(a, b); }

Cyclo::Cyclo() : order_(1), coeffs_(1, Rational(0)) {}

Cyclo::Cyclo(long value) : order_(1), coeffs_(1, Rational(value)) {}

Cyclo::Cyclo(const Rational& value, int order)
    : order_(order), coeffs_(euler_phi(order), Rational(0)) {
  require_order(order);
  coeffs_[0] = value;
}

Cyclo::Cyclo(int order, std::vector<Rational> coeffs, bool)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclo Cyclo::from_poly(int order, std::vector<Rational> poly) {
  require_order(order);
  return Cyclo(order, reduce(order, std::move(poly)), true);
}

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool Cyclo::is_one() const { return is_rational() && coeffs_[0] == 1; }

Cyclo Cyclo::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Cyclo(order_, std::move(out), true);
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  if (x.order_ != y.order_) {
    auto [a, b] = promote(x, y);
    return a + b;
  }
  std::vector<Rational> out(x.coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coeffs_[i];
  return Cyclo(x.order_, std::move(out), true);
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) { return x + (-y); }

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (x.order_ != y.order_) {
    auto [a, b] = promote(x, y);
    return a * b;
  }
  const auto& a = x.coeffs_;
  const auto& b = y.coeffs_;
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (sgn(b[j]) != 0) nz_b.push_back(j);
  }
  Poly out(2 * a.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j : nz_b) out[i + j] += a[i] * b[j];
  }
  return Cyclo(x.order_, reduce(x.order_, std::move(out)), true);
}

Cyclo operator/(const Cyclo& x, const Cyclo& y) { return x * inv(y); }

bool operator==(const Cyclo& x, const Cyclo& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  const int m = std::lcm(x.order_, y.order_);
  return embed(x, m).coeffs_ == embed(y, m).coeffs_;
}

Cyclo Cyclo::pow(long exponent) const {
  Cyclo base = exponent < 0 ? inv(*this) : *this;
  unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
  Cyclo result(Rational(1), order_);
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string Cyclo::key() const {
  std::string out = std::to_string(order_);
  out += ':';
  for (const auto& c : coeffs_) {
    out += c.get_str();
    out += ',';
  }
  return out;
}

Cyclo root_of_unity(int order, long k) {
  require_order(order);
  long e = k % order;
  if (e < 0) e += order;
  Poly poly(e + 1, Rational(0));
  poly[e] = 1;
  return Cyclo::from_poly(order, std::move(poly));
}

Cyclo add(const Cyclo& x, const Cyclo& y) { return x + y; }
Cyclo mul(const Cyclo& x, const Cyclo& y) { return x * y; }
Cyclo neg(const Cyclo& x) { return -x; }

Cyclo inv(const Cyclo& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  const int order = x.order();
  if (x.is_rational()) return Cyclo(1 / x.rational_part(), order);

  Poly modulus;
  for (const auto& c : cyclo_poly(order).dense) modulus.emplace_back(c);
  Poly a = x.coeffs();
  trim(a);

  // Invariant: s * x == r (mod Phi_N).
  Poly r0 = modulus, r1 = a;
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_N is irreducible, so the last nonzero remainder is a constant.
  const Rational c = r1.front();
  for (auto& v : s1) v /= c;
  return Cyclo::from_poly(order, std::move(s1));
}

Cyclo conj(const Cyclo& x) {
  const int n = x.order();
  return Cyclo::from_poly(n, power_image(x, n, n - 1));
}

Cyclo embed(const Cyclo& x, int order) {
  require_order(order);
  if (order % x.order() != 0) {
    throw NonDivisibleOrder("cannot embed Q(zeta_" + std::to_string(x.order()) +
                            ") into Q(zeta_" + std::to_string(order) + ")");
  }
  if (order == x.order()) return x;
  return Cyclo::from_poly(order, power_image(x, order, order / x.order()));
}

std::optional<Cyclo> restrict_to(const Cyclo& x, int order) {
  require_order(order);
  if (x.order() % order != 0) {
    throw NonDivisibleOrder("Q(zeta_" + std::to_string(order) + ") is not a subfield of Q(zeta_" +
                            std::to_string(x.order()) + ")");
  }
  if (order == x.order()) return x;

  // Solve sum_j q_j * embed(zeta_M^j) = x over Q by Gauss-Jordan elimination.
  const std::size_t rows = x.coeffs().size();
  const std::size_t cols = euler_phi(order);
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t j = 0; j < cols; ++j) {
    const Cyclo b = embed(root_of_unity(order, static_cast<long>(j)), x.order());
    for (std::size_t i = 0; i < rows; ++i) aug[i][j] = b.coeffs()[i];
  }
  for (std::size_t i = 0; i < rows; ++i) aug[i][cols] = x.coeffs()[i];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(aug[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[row]);
    const Rational lead = aug[row][col];
    for (auto& v : aug[row]) v /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(aug[i][col]) == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t k = col; k <= cols; ++k) aug[i][k] -= f * aug[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (sgn(aug[i][cols]) != 0) return std::nullopt;
  }
  Poly sol(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = aug[i][cols];
  return Cyclo::from_poly(order, std::move(sol));
}

int minimal_order(const Cyclo& x) {
  for (int m = 1; m <= x.order(); ++m) {
    if (x.order() % m == 0 && restrict_to(x, m)) return m;
  }
  return x.order();
}

Cyclo sqrt2(int order) {
  if (order % 8 != 0) throw NonDivisibleOrder("sqrt2 needs an order divisible by 8");
  return embed(root_of_unity(8, 1) + root_of_unity(8, 7), order);
}

Cyclo sqrt3(int order) {
  if (order % 12 != 0) throw NonDivisibleOrder("sqrt3 needs an order divisible by 12");
  return embed(root_of_unity(12, 1) + root_of_unity(12, 11), order);
}

std::complex<double> to_float(const Cyclo& x) {
  std::complex<double> sum = 0.0;
  const double step = 2.0 * std::numbers::pi / x.order();
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    sum += c[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
  }
  return sum;
}

}  // namespace su3braid
