#ifndef EPSC_SUPERLINE_HPP
#define EPSC_SUPERLINE_HPP

#include <vector>

#include "epsc/scalar.hpp"

namespace epsc {

// An invertible Z-graded super line, recorded as (degree, unit) where the
// unit is the coordinate of the implied generator relative to a canonical
// reference generator.  The unit is always nonzero.
struct GradedSuperLine {
  int degree = 0;
  Scalar unit;

  GradedSuperLine() : unit(rationalField(), 1) {}
  GradedSuperLine(int deg, Scalar u);
};

GradedSuperLine tensorLines(const GradedSuperLine& a, const GradedSuperLine& b);

// The commutativity-constraint sign (-1)^(deg_a * deg_b).
Scalar swapSign(const GradedSuperLine& a, const GradedSuperLine& b);

// A based graded chunk: `rank` basis elements sitting in cochain degree
// `degree`.  Parity for the Koszul rule is (degree * rank) mod 2.
struct GradedBlock {
  int degree = 0;
  int rank = 0;
};

// Sign of reordering a sequence of graded blocks.  `perm[k]` is the source
// index of the block placed at target position k.  Each transposition of
// blocks i, j contributes (-1)^((deg_i rank_i)(deg_j rank_j)).
Scalar regroupingSign(FieldSpec f, const std::vector<GradedBlock>& blocks,
                      const std::vector<int>& perm);

// Element-level version: `degrees[i]` is the cochain degree of the i-th
// basis element; inverted pairs contribute (-1)^(deg_i * deg_j).
Scalar koszulPermutationSign(FieldSpec f, const std::vector<int>& degrees,
                             const std::vector<int>& perm);

}  // namespace epsc

#endif
