#ifndef EPSC_MATRIX_HPP
#define EPSC_MATRIX_HPP

#include <vector>

#include "epsc/scalar.hpp"

namespace epsc {

struct Rref;

// Dense matrix over an exact field.  Row-major storage.
class Matrix {
 public:
  Matrix() : Matrix(rationalField(), 0, 0) {}
  Matrix(FieldSpec f, int rows, int cols);

  static Matrix identity(FieldSpec f, int n);
  static Matrix fromRows(FieldSpec f,
                         const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return f_; }

  Scalar& at(int i, int j);
  const Scalar& at(int i, int j) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const Scalar& c) const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool isZero() const;
  Matrix transpose() const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  // Horizontal concatenation [this | b].
  Matrix augment(const Matrix& b) const;
  Matrix column(int j) const;
  // Matrix whose columns are the given columns of this.
  Matrix selectColumns(const std::vector<int>& js) const;

  Matrix inverse() const;  // throws if singular
  Scalar det() const;      // square only
  int rank() const;

  // Column vectors spanning ker(this), deterministic (RREF free columns,
  // pivot rule: leftmost column, then lowest row index; pivots scaled to 1).
  Matrix kernelBasis() const;
  // Indices of pivot columns of the RREF: their images form a basis of im.
  std::vector<int> pivotColumns() const;

  Rref rref() const;

 private:
  FieldSpec f_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix r;                     // reduced row echelon form
  std::vector<int> pivotCols;   // pivot column per pivot row
};

}  // namespace epsc

#endif
