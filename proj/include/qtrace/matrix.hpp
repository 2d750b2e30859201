#pragma once

#include <vector>

#include "qtrace/fracfn.hpp"

namespace qtrace {

// Dense matrix over FracFn.  Sizes here are tiny (tensor products of sl2
// modules of dimension <= 7), so no sparsity is attempted.
class FMatrix {
 public:
  FMatrix() : rows_(0), cols_(0) {}
  FMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static FMatrix identity(int n) {
    FMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FracFn::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FracFn& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const FracFn& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend FMatrix operator*(const FMatrix& a, const FMatrix& b);
  friend FMatrix operator+(const FMatrix& a, const FMatrix& b);
  friend FMatrix operator-(const FMatrix& a, const FMatrix& b);
  FMatrix scaled(const FracFn& c) const;
  FMatrix transposed() const;

  bool is_zero() const;
  bool is_identity() const;
  // entrywise frac_eq
  bool eq(const FMatrix& o) const;

  // Inverse by Gauss-Jordan elimination over the fraction field.
  // Throws std::domain_error when singular (zero pivot column).
  FMatrix inverse() const;

  // Kronecker product in lexicographic basis order (first factor major).
  static FMatrix kron(const FMatrix& a, const FMatrix& b);

  FracFn det() const;

 private:
  int rows_, cols_;
  std::vector<FracFn> a_;
};

}  // namespace qtrace
