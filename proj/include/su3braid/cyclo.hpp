#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "su3braid/errors.hpp"

namespace su3braid {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in lowest
// terms with a positive denominator; values built from a raw num/den pair go
// through make_rational, which canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
// Always "num/den", including "n/1" for integers.
std::string format_rational(const Rational& q);

long euler_phi(long n);

// Coefficients c_0..c_deg of the N-th cyclotomic polynomial (monic).
// Memoized per order; safe to call from several threads.
const std::vector<mpz_class>& cyclotomic_polynomial(int order);

/// An element of the cyclotomic field Q(zeta_N).
///
/// Stored as the unique remainder of sum c_i zeta^i modulo Phi_N, so the
/// coefficient vector always has length phi(N) and two values of the same
/// order are equal iff their coefficients are. Values are immutable once
/// built; every operation returns a fresh canonical value.
///
/// Binary operations accept operands of different orders when one order
/// divides the other (the smaller one is embedded). Otherwise they throw
/// OrderMismatch. Equality compares in Q(zeta_lcm) and never throws.
class Cyclo {
 public:
  Cyclo();  // zero of Q(zeta_1)
  Cyclo(long value);  // NOLINT: integers promote implicitly
  explicit Cyclo(const Rational& value, int order = 1);

  // Reduces an arbitrary-length polynomial in zeta_N (x^N = 1 is used first,
  // then the remainder modulo Phi_N is taken).
  static Cyclo from_poly(int order, std::vector<Rational> poly);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q (only the constant coefficient survives).
  bool is_rational() const;
  // Constant coefficient; meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator/(const Cyclo& x, const Cyclo& y);
  Cyclo& operator+=(const Cyclo& y) { return *this = *this + y; }
  Cyclo& operator-=(const Cyclo& y) { return *this = *this - y; }
  Cyclo& operator*=(const Cyclo& y) { return *this = *this * y; }

  friend bool operator==(const Cyclo& x, const Cyclo& y);

  // Exponent may be negative; zero is not invertible.
  Cyclo pow(long exponent) const;

  // Canonical text of the coefficients, used as a hash key.
  std::string key() const;

 private:
  Cyclo(int order, std::vector<Rational> coeffs, bool canonical);

  int order_;
  std::vector<Rational> coeffs_;
};

Cyclo root_of_unity(int order, long k);

Cyclo add(const Cyclo& x, const Cyclo& y);
Cyclo mul(const Cyclo& x, const Cyclo& y);
Cyclo neg(const Cyclo& x);
// Extended Euclid against Phi_N. Throws DivisionByZero for zero.
Cyclo inv(const Cyclo& x);
// zeta -> zeta^{-1}; complex conjugation under every embedding.
Cyclo conj(const Cyclo& x);

// Same field element written in Q(zeta_M). Requires order(x) | M.
Cyclo embed(const Cyclo& x, int order);
// Inverse of embed: the element rewritten over Q(zeta_M) when it lies in that
// subfield, nullopt otherwise. Requires M | order(x).
std::optional<Cyclo> restrict_to(const Cyclo& x, int order);
// Smallest order M dividing order(x) whose field contains x.
int minimal_order(const Cyclo& x);

// zeta_8 + zeta_8^-1 and zeta_12 + zeta_12^-1, embedded into `order`.
Cyclo sqrt2(int order = 8);
Cyclo sqrt3(int order = 12);

// Display and cross-checks only; never used for equality.
std::complex<double> to_float(const Cyclo& x);

// Promote both values to a common order (lcm) for callers that mix fields.
int common_order(int a, int b);

}  // namespace su3braid
