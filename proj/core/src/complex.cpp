#include "epsc/complex.hpp"

namespace epsc {

BoundedComplex::BoundedComplex(FieldSpec f) : f_(f) {}

BoundedComplex::BoundedComplex(FieldSpec f, int lo, std::vector<int> ranks,
                               std::vector<Matrix> diffs,
                               std::vector<std::vector<std::string>> labels)
    : f_(f), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)),
      labels_(std::move(labels)) {
  // Strip zero ranks at the ends so that the degree range is tight.
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
    if (!labels_.empty() && labels_.size() > ranks_.size()) labels_.pop_back();
  }
  while (!ranks_.empty() && ranks_.front() == 0) {
    ranks_.erase(ranks_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    if (!labels_.empty()) labels_.erase(labels_.begin());
    ++lo_;
  }
  if (ranks_.empty()) {
    diffs_.clear();
    labels_.clear();
    lo_ = 0;
    return;
  }
  for (int r : ranks_)
    if (r < 0) throw Error("negative rank in complex");
  std::size_t nd = ranks_.size() - 1;
  if (diffs_.size() != nd) throw Error("wrong number of differentials");
  for (std::size_t k = 0; k < nd; ++k) {
    if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k] ||
        !(diffs_[k].field() == f_))
      throw Error("differential shape/field mismatch at degree " +
                  std::to_string(lo_ + static_cast<int>(k)));
  }
  for (std::size_t k = 0; k + 1 < nd; ++k)
    if (!(diffs_[k + 1] * diffs_[k]).isZero())
      throw Error("d.d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k)));
  if (labels_.empty()) {
    labels_.resize(ranks_.size());
    for (std::size_t k = 0; k < ranks_.size(); ++k)
      for (int i = 0; i < ranks_[k]; ++i)
        labels_[k].push_back("e" + std::to_string(lo_ + static_cast<int>(k)) +
                             ":" + std::to_string(i));
  } else if (labels_.size() != ranks_.size()) {
    throw Error("label rows must match degree range");
  } else {
    for (std::size_t k = 0; k < ranks_.size(); ++k)
      if (static_cast<int>(labels_[k].size()) != ranks_[k])
        throw Error("label count mismatch at degree " +
                    std::to_string(lo_ + static_cast<int>(k)));
  }
}

int BoundedComplex::rank(int n) const {
  if (ranks_.empty() || n < lo_ || n > hi()) return 0;
  return ranks_[n - lo_];
}

int BoundedComplex::totalRank() const {
  int t = 0;
  for (int r : ranks_) t += r;
  return t;
}

Matrix BoundedComplex::differential(int n) const {
  if (!ranks_.empty() && n >= lo_ && n < hi()) return diffs_[n - lo_];
  return Matrix(f_, rank(n + 1), rank(n));
}

const std::vector<std::string>& BoundedComplex::labels(int n) const {
  static const std::vector<std::string> empty;
  if (ranks_.empty() || n < lo_ || n > hi()) return empty;
  return labels_[n - lo_];
}

bool operator==(const BoundedComplex& a, const BoundedComplex& b) {
  if (!(a.f_ == b.f_) || a.lo_ != b.lo_ || a.ranks_ != b.ranks_) return false;
  return a.diffs_ == b.diffs_;
}

BoundedComplex shift(const BoundedComplex& c, int k) {
  if (c.isZero()) return c;
  std::vector<int> ranks;
  std::vector<Matrix> diffs;
  std::vector<std::vector<std::string>> labels;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    ranks.push_back(c.rank(n));
    labels.push_back(c.labels(n));
    if (n < c.hi())
      diffs.push_back(c.differential(n) * signPow(c.field(), k));
  }
  return BoundedComplex(c.field(), c.lo() - k, std::move(ranks),
                        std::move(diffs), std::move(labels));
}

BoundedComplex directSum(const BoundedComplex& a, const BoundedComplex& b) {
  if (!(a.field() == b.field())) throw Error("direct sum over different fields");
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  int lo = std::min(a.lo(), b.lo());
  int hi = std::max(a.hi(), b.hi());
  std::vector<int> ranks;
  std::vector<Matrix> diffs;
  std::vector<std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    int ra = a.rank(n), rb = b.rank(n);
    ranks.push_back(ra + rb);
    std::vector<std::string> lab = a.labels(n);
    for (const auto& s : b.labels(n)) lab.push_back(s + "'");
    while (static_cast<int>(lab.size()) < ra + rb)
      lab.push_back("e" + std::to_string(n) + ":" + std::to_string(lab.size()));
    labels.push_back(std::move(lab));
    if (n < hi) {
      Matrix d(a.field(), a.rank(n + 1) + b.rank(n + 1), ra + rb);
      Matrix da = a.differential(n), db = b.differential(n);
      for (int i = 0; i < da.rows(); ++i)
        for (int j = 0; j < da.cols(); ++j) d.at(i, j) = da.at(i, j);
      for (int i = 0; i < db.rows(); ++i)
        for (int j = 0; j < db.cols(); ++j)
          d.at(a.rank(n + 1) + i, ra + j) = db.at(i, j);
      diffs.push_back(std::move(d));
    }
  }
  return BoundedComplex(a.field(), lo, std::move(ranks), std::move(diffs),
                        std::move(labels));
}

CohomologyData::CohomologyData(int lo, std::vector<int> dims,
                               std::vector<Matrix> reps)
    : lo_(lo), dims_(std::move(dims)), reps_(std::move(reps)) {
  if (dims_.size() != reps_.size()) throw Error("cohomology data mismatch");
}

int CohomologyData::h(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[n - lo_];
}

const Matrix& CohomologyData::representatives(int n) const {
  static const Matrix empty;
  if (n < lo_ || n > hi()) return empty;
  return reps_[n - lo_];
}

bool CohomologyData::allZero() const {
  for (int d : dims_)
    if (d != 0) return false;
  return true;
}

CohomologyData cohomology(const BoundedComplex& c) {
  std::vector<int> dims;
  std::vector<Matrix> reps;
  if (c.isZero()) return CohomologyData(0, {}, {});
  for (int n = c.lo(); n <= c.hi(); ++n) {
    Matrix ker = c.differential(n).kernelBasis();
    Matrix dprev = c.differential(n - 1);
    Matrix bnd = dprev.selectColumns(dprev.pivotColumns());
    // Representatives: kernel columns that extend a basis of the boundaries.
    Matrix stacked = bnd.augment(ker);
    std::vector<int> chosen;
    for (int p : stacked.pivotColumns())
      if (p >= bnd.cols()) chosen.push_back(p - bnd.cols());
    reps.push_back(ker.selectColumns(chosen));
    dims.push_back(static_cast<int>(chosen.size()));
  }
  return CohomologyData(c.lo(), std::move(dims), std::move(reps));
}

long long eulerCharacteristic(const BoundedComplex& c) {
  long long chi = 0;
  for (int n = c.lo(); n <= c.hi(); ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(c.rank(n));
  return chi;
}

GradedSuperLine detLine(const BoundedComplex& c) {
  return GradedSuperLine(static_cast<int>(eulerCharacteristic(c)),
                         one(c.field()));
}

Scalar torsion(const BoundedComplex& c, const CohomologyData& h) {
  FieldSpec f = c.field();
  Scalar tau = one(f);
  for (int n = c.lo(); n <= c.hi(); ++n) {
    int rn = c.rank(n);
    const Matrix& reps = h.representatives(n);
    if (h.h(n) > 0 && (reps.rows() != rn || reps.cols() != h.h(n)))
      throw Error("cohomology data shape mismatch at degree " +
                  std::to_string(n));
    if (h.h(n) > 0 && !(c.differential(n) * reps).isZero())
      throw Error("representatives are not cocycles at degree " +
                  std::to_string(n));
    Matrix dprev = c.differential(n - 1);
    Matrix bnd = dprev.selectColumns(dprev.pivotColumns());
    std::vector<int> lift = c.differential(n).pivotColumns();
    if (bnd.cols() + h.h(n) + static_cast<int>(lift.size()) != rn)
      throw Error("cohomology dimensions inconsistent with complex at degree " +
                  std::to_string(n));
    Matrix a(f, rn, rn);
    int col = 0;
    for (int j = 0; j < bnd.cols(); ++j, ++col)
      for (int i = 0; i < rn; ++i) a.at(i, col) = bnd.at(i, j);
    for (int j = 0; j < h.h(n); ++j, ++col)
      for (int i = 0; i < rn; ++i) a.at(i, col) = reps.at(i, j);
    for (int j : lift) a.at(j, col++) = one(f);
    Scalar d = a.det();
    if (d.isZero())
      throw Error("adapted basis is degenerate at degree " + std::to_string(n) +
                  " (representatives dependent modulo boundaries?)");
    tau = (n % 2 == 0) ? tau / d : tau * d;
  }
  return tau;
}

}  // namespace epsc
