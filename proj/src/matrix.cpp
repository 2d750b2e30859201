#include "qtrace/matrix.hpp"

#include <stdexcept>

namespace qtrace {

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("FMatrix: size mismatch in product");
  FMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const FracFn& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const FracFn& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

FMatrix operator+(const FMatrix& a, const FMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("FMatrix: size mismatch in sum");
  FMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

FMatrix operator-(const FMatrix& a, const FMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("FMatrix: size mismatch in diff");
  FMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

FMatrix FMatrix::scaled(const FracFn& c) const {
  FMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

FMatrix FMatrix::transposed() const {
  FMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool FMatrix::is_zero() const {
  for (const auto& f : a_)
    if (!f.is_zero()) return false;
  return true;
}

bool FMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).eq(FracFn::one()) : !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

bool FMatrix::eq(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].eq(o.a_[i])) return false;
  return true;
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("FMatrix::inverse: not square");
  int n = rows_;
  FMatrix a = *this;
  FMatrix inv = FMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("FMatrix::inverse: singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    FracFn p = a(col, col).inv();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      FracFn f = a(r, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

FMatrix FMatrix::kron(const FMatrix& a, const FMatrix& b) {
  FMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          if (b(k, l).is_zero()) continue;
          r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

FracFn FMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("FMatrix::det: not square");
  int n = rows_;
  FMatrix a = *this;
  FracFn d = FracFn::one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return FracFn();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    FracFn p = a(col, col).inv();
    for (int r = col + 1; r < n; ++r) {
      FracFn f = a(r, col);
      if (f.is_zero()) continue;
      f *= p;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

}  // namespace qtrace
