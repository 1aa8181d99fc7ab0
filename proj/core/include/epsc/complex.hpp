#ifndef EPSC_COMPLEX_HPP
#define EPSC_COMPLEX_HPP

#include <string>
#include <vector>

#include "epsc/matrix.hpp"
#include "epsc/superline.hpp"

namespace epsc {

// A based bounded cochain complex: free modules of recorded rank in degrees
// lo..hi and differentials d_n : C^n -> C^{n+1}.  d.d = 0 is checked at
// construction.
class BoundedComplex {
 public:
  explicit BoundedComplex(FieldSpec f);  // the zero complex
  BoundedComplex(FieldSpec f, int lo, std::vector<int> ranks,
                 std::vector<Matrix> diffs,
                 std::vector<std::vector<std::string>> labels = {});

  const FieldSpec& field() const { return f_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  bool isZero() const { return ranks_.empty(); }
  int rank(int n) const;
  int totalRank() const;
  // d_n, a rank(n+1) x rank(n) matrix (zero-shaped outside [lo, hi-1]).
  Matrix differential(int n) const;
  const std::vector<std::string>& labels(int n) const;

  friend bool operator==(const BoundedComplex&, const BoundedComplex&);

 private:
  FieldSpec f_;
  int lo_ = 0;
  std::vector<int> ranks_;
  std::vector<Matrix> diffs_;  // diffs_[k] = d_{lo+k}, size max(ranks_.size()-1, 0)
  std::vector<std::vector<std::string>> labels_;
};

BoundedComplex shift(const BoundedComplex& c, int k);  // C[k]^n = C^{n+k}
BoundedComplex directSum(const BoundedComplex& a, const BoundedComplex& b);

// Chosen cohomology bases: per degree the dimension and a matrix of cocycle
// representatives (columns), independent modulo boundaries.
class CohomologyData {
 public:
  CohomologyData() = default;
  CohomologyData(int lo, std::vector<int> dims, std::vector<Matrix> reps);

  int h(int n) const;
  const Matrix& representatives(int n) const;
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool allZero() const;

 private:
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<Matrix> reps_;
};

// Deterministic cohomology (fixed pivot rule), with adapted bases.
CohomologyData cohomology(const BoundedComplex& c);

long long eulerCharacteristic(const BoundedComplex& c);

// det C with the canonical generator built from the recorded bases:
// degree chi(C), unit 1.
GradedSuperLine detLine(const BoundedComplex& c);

// The scalar realizing det C = det H(C) in the given bases (Milnor-style
// torsion); tau([k^n -> k^n] in degrees 0,1) = det of the differential.
// Throws if H is not an adapted decomposition for C.
Scalar torsion(const BoundedComplex& c, const CohomologyData& h);

}  // namespace epsc

#endif
