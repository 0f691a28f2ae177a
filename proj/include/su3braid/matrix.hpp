#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "su3braid/cyclo.hpp"

namespace su3braid {

// Dense square matrix over cyclotomic scalars.
class Matrix {
 public:
  explicit Matrix(int dim = 0);
  Matrix(std::initializer_list<std::initializer_list<Cyclo>> rows);

  static Matrix identity(int dim, int order = 1);
  static Matrix diagonal(const std::vector<Cyclo>& entries);

  int dim() const { return dim_; }
  const Cyclo& operator()(int row, int col) const { return entries_[row * dim_ + col]; }
  Cyclo& operator()(int row, int col) { return entries_[row * dim_ + col]; }
  const std::vector<Cyclo>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Cyclo& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Matrix conjugate() const;
  Matrix adjoint() const;  // conjugate transpose

  Cyclo trace() const;
  Cyclo determinant() const;
  // Coefficients c_0..c_dim of det(x I - M), so c_dim == 1.
  std::vector<Cyclo> char_poly() const;

  bool is_identity() const;
  bool is_diagonal() const;
  bool is_unitary() const;

  // lcm of the entry orders.
  int scalar_order() const;
  // Every entry rewritten in Q(zeta_order); requires divisibility.
  Matrix with_order(int order) const;

  // Canonical text over Q(zeta_order); byte-equal keys iff equal matrices.
  std::string key(int order) const;

 private:
  int dim_;
  std::vector<Cyclo> entries_;
};

Matrix pow(const Matrix& m, long exponent);

/// A matrix whose M * M^dagger == I has been verified exactly.
///
/// Products and adjoints of unitary matrices stay unitary, so those paths skip
/// the re-check; every other construction goes through `checked`.
class UnitaryMatrix {
 public:
  static UnitaryMatrix checked(Matrix m);
  static UnitaryMatrix identity(int dim, int order = 1);

  const Matrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  const Cyclo& operator()(int row, int col) const { return m_(row, col); }

  UnitaryMatrix inverse() const { return UnitaryMatrix(m_.adjoint()); }
  UnitaryMatrix with_order(int order) const { return UnitaryMatrix(m_.with_order(order)); }
  // Scaling by a unit-modulus scalar keeps unitarity; checked for the modulus.
  UnitaryMatrix scaled(const Cyclo& phase) const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.m_ * b.m_);
  }
  friend bool operator==(const UnitaryMatrix& a, const UnitaryMatrix& b) { return a.m_ == b.m_; }

 private:
  explicit UnitaryMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

UnitaryMatrix pow(const UnitaryMatrix& m, long exponent);

// Least n >= 1 with m^n == I; throws OrderExceedsCap past `cap`.
long matrix_order(const UnitaryMatrix& m, long cap);

}  // namespace su3braid
