#include "epsc/matrix.hpp"

namespace epsc {

Matrix::Matrix(FieldSpec f, int rows, int cols)
    : f_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar(f));
}

Matrix Matrix::identity(FieldSpec f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = one(f);
  return m;
}

Matrix Matrix::fromRows(FieldSpec f,
                        const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Scalar& Matrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw Error("matrix index out of range");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

const Scalar& Matrix::at(int i, int j) const {
  return const_cast<Matrix*>(this)->at(i, j);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.f_ == b.f_))
    throw Error("matrix shape/field mismatch in +");
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.f_ == b.f_))
    throw Error("matrix shape/field mismatch in -");
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || !(a.f_ == b.f_))
    throw Error("matrix shape/field mismatch in *");
  Matrix r(a.f_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).isZero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.f_ == b.f_)) return false;
  return a.a_ == b.a_;
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error("vector length mismatch in apply");
  std::vector<Scalar> r(rows_, Scalar(f_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::augment(const Matrix& b) const {
  if (rows_ != b.rows_ || !(f_ == b.f_))
    throw Error("matrix shape/field mismatch in augment");
  Matrix r(f_, rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::column(int j) const { return selectColumns({j}); }

Matrix Matrix::selectColumns(const std::vector<int>& js) const {
  Matrix r(f_, rows_, static_cast<int>(js.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < js.size(); ++k) r.at(i, k) = at(i, js[k]);
  return r;
}

Rref Matrix::rref() const {
  Rref out{*this, {}};
  Matrix& m = out.r;
  int pivotRow = 0;
  for (int col = 0; col < cols_ && pivotRow < rows_; ++col) {
    int sel = -1;
    for (int i = pivotRow; i < rows_; ++i)
      if (!m.at(i, col).isZero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivotRow)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivotRow, j));
    Scalar inv = m.at(pivotRow, col).inverse();
    for (int j = col; j < cols_; ++j) m.at(pivotRow, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == pivotRow || m.at(i, col).isZero()) continue;
      Scalar factor = m.at(i, col);
      for (int j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(pivotRow, j);
    }
    out.pivotCols.push_back(col);
    ++pivotRow;
  }
  return out;
}

int Matrix::rank() const { return static_cast<int>(rref().pivotCols.size()); }

std::vector<int> Matrix::pivotColumns() const { return rref().pivotCols; }

Matrix Matrix::kernelBasis() const {
  Rref e = rref();
  std::vector<char> isPivot(cols_, 0);
  for (int c : e.pivotCols) isPivot[c] = 1;
  std::vector<int> freeCols;
  for (int j = 0; j < cols_; ++j)
    if (!isPivot[j]) freeCols.push_back(j);
  Matrix k(f_, cols_, static_cast<int>(freeCols.size()));
  for (std::size_t fc = 0; fc < freeCols.size(); ++fc) {
    int j = freeCols[fc];
    k.at(j, static_cast<int>(fc)) = one(f_);
    for (std::size_t pr = 0; pr < e.pivotCols.size(); ++pr)
      k.at(e.pivotCols[pr], static_cast<int>(fc)) =
          -e.r.at(static_cast<int>(pr), j);
  }
  return k;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  Rref e = augment(identity(f_, rows_)).rref();
  if (static_cast<int>(e.pivotCols.size()) != rows_ ||
      (rows_ > 0 && e.pivotCols.back() >= rows_))
    throw Error("matrix not invertible");
  Matrix r(f_, rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) r.at(i, j) = e.r.at(i, rows_ + j);
  return r;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  Matrix m = *this;
  Scalar d = one(f_);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int i = col; i < rows_; ++i)
      if (!m.at(i, col).isZero()) {
        sel = i;
        break;
      }
    if (sel < 0) return zero(f_);
    if (sel != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).isZero()) continue;
      Scalar factor = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return d;
}

}  // namespace epsc
