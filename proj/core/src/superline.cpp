#include "epsc/superline.hpp"

#include <algorithm>

namespace epsc {

GradedSuperLine::GradedSuperLine(int deg, Scalar u)
    : degree(deg), unit(std::move(u)) {
  if (unit.isZero()) throw Error("graded super line unit must be nonzero");
}

GradedSuperLine tensorLines(const GradedSuperLine& a,
                            const GradedSuperLine& b) {
  return GradedSuperLine(a.degree + b.degree, a.unit * b.unit);
}

Scalar swapSign(const GradedSuperLine& a, const GradedSuperLine& b) {
  long long e = static_cast<long long>(a.degree) * b.degree;
  return signPow(a.unit.field(), e);
}

namespace {

void checkPermutation(std::size_t n, const std::vector<int>& perm) {
  if (perm.size() != n) throw Error("permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(n) || seen[p])
      throw Error("invalid permutation");
    seen[p] = 1;
  }
}

// Parity-weighted inversion count: an inverted pair flips the sign iff both
// parities are odd.
Scalar inversionSign(FieldSpec f, const std::vector<int>& parity,
                     const std::vector<int>& perm) {
  long long e = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) e += parity[perm[i]] * parity[perm[j]];
  return signPow(f, e);
}

}  // namespace

Scalar regroupingSign(FieldSpec f, const std::vector<GradedBlock>& blocks,
                      const std::vector<int>& perm) {
  checkPermutation(blocks.size(), perm);
  std::vector<int> parity(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    parity[i] = ((blocks[i].degree % 2) != 0 && (blocks[i].rank % 2) != 0) ? 1 : 0;
  return inversionSign(f, parity, perm);
}

Scalar koszulPermutationSign(FieldSpec f, const std::vector<int>& degrees,
                             const std::vector<int>& perm) {
  checkPermutation(degrees.size(), perm);
  std::vector<int> parity(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i)
    parity[i] = (degrees[i] % 2 != 0) ? 1 : 0;
  return inversionSign(f, parity, perm);
}

}  // namespace epsc
