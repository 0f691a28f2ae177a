#include "su3braid/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace su3braid {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

Matrix::Matrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
  if (dim < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Cyclo>> rows)
    : Matrix(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("matrix must be square");
    int c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

Matrix Matrix::identity(int dim, int order) {
  Matrix m(dim);
  for (auto& e : m.entries_) e = Cyclo(Rational(0), order);
  for (int i = 0; i < dim; ++i) m(i, i) = Cyclo(Rational(1), order);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Cyclo>& entries) {
  const int dim = static_cast<int>(entries.size());
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = entries[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const int n = a.dim_;
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Cyclo& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  // Keep the operands' field even where every product vanished.
  const int order = std::lcm(a.scalar_order(), b.scalar_order());
  for (auto& e : out.entries_) {
    if (e.order() != order) e = embed(e, order);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix out(a.dim_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

Matrix operator*(const Cyclo& s, const Matrix& m) {
  Matrix out(m.dim_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = s * m.entries_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::conjugate() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = conj(entries_[i]);
  return out;
}

Matrix Matrix::adjoint() const { return conjugate().transpose(); }

Cyclo Matrix::trace() const {
  Cyclo t;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

Cyclo Matrix::determinant() const {
  // Gaussian elimination over the field.
  Matrix work = *this;
  Cyclo det(1);
  for (int col = 0; col < dim_; ++col) {
    int pivot = col;
    while (pivot < dim_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == dim_) return Cyclo(Rational(0), scalar_order());
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    const Cyclo lead = work(col, col);
    det *= lead;
    const Cyclo lead_inv = inv(lead);
    for (int i = col + 1; i < dim_; ++i) {
      if (work(i, col).is_zero()) continue;
      const Cyclo f = work(i, col) * lead_inv;
      for (int j = col; j < dim_; ++j) work(i, j) -= f * work(col, j);
    }
  }
  return det;
}

std::vector<Cyclo> Matrix::char_poly() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const int n = dim_;
  std::vector<Cyclo> c(n + 1);
  c[n] = Cyclo(1);
  Matrix mk(n);
  for (int k = 1; k <= n; ++k) {
    Matrix next = *this * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -((*this * mk).trace() * Cyclo(make_rational(1, k)));
  }
  return c;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const Cyclo& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_unitary() const { return (*this * adjoint()).is_identity(); }

int Matrix::scalar_order() const {
  int order = 1;
  for (const auto& e : entries_) order = std::lcm(order, e.order());
  return order;
}

Matrix Matrix::with_order(int order) const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = embed(entries_[i], order);
  return out;
}

std::string Matrix::key(int order) const {
  std::string out = std::to_string(dim_) + "|";
  for (const auto& e : entries_) {
    out += (e.order() == order ? e : embed(e, order)).key();
    out += ';';
  }
  return out;
}

Matrix pow(const Matrix& m, long exponent) {
  if (exponent < 0) throw std::invalid_argument("negative power of a general matrix");
  Matrix result = Matrix::identity(m.dim(), m.scalar_order());
  Matrix base = m;
  for (unsigned long e = exponent; e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

UnitaryMatrix UnitaryMatrix::checked(Matrix m) {
  if (!m.is_unitary()) throw NotUnitary("matrix is not exactly unitary");
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(int dim, int order) {
  return UnitaryMatrix(Matrix::identity(dim, order));
}

UnitaryMatrix UnitaryMatrix::scaled(const Cyclo& phase) const {
  if (!(phase * conj(phase)).is_one()) throw NotUnitary("scaling phase is not of modulus 1");
  return UnitaryMatrix(phase * m_);
}

UnitaryMatrix pow(const UnitaryMatrix& m, long exponent) {
  UnitaryMatrix base = exponent < 0 ? m.inverse() : m;
  UnitaryMatrix result = UnitaryMatrix::identity(m.dim(), m.matrix().scalar_order());
  for (unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent; e != 0;
       e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

long matrix_order(const UnitaryMatrix& m, long cap) {
  UnitaryMatrix power = m;
  for (long n = 1; n <= cap; ++n) {
    if (power.matrix().is_identity()) return n;
    power = power * m;
  }
  throw OrderExceedsCap("element order exceeds cap " + std::to_string(cap));
}

}  // namespace su3braid
