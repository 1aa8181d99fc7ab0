#ifndef EPSC_PARTITION_HPP
#define EPSC_PARTITION_HPP

#include <optional>
#include <vector>

#include "epsc/cellcomplex.hpp"

namespace epsc {

// A partition of a locally closed ambient cell set into disjoint nonempty
// locally closed parts.
struct Partition {
  CellSet ambient;
  std::vector<CellSet> parts;
};

// Validates the partition invariants (disjoint cover, parts locally closed);
// throws on violation.
void validatePartition(const CellComplex& x, const Partition& p);

// A linear ordering of parts such that each part's frontier cl(A) \ A lies
// in the union of strictly earlier parts (within the ambient set).
struct ClosedFiltrationWitness {
  std::vector<int> order;  // part indices, earliest first
};

struct WitnessResult {
  std::optional<ClosedFiltrationWitness> witness;
  std::vector<int> cycle;  // a cycle of part indices when no witness exists
};

// Topological sort over the relation B -> A whenever B meets cl(A) \ A,
// Kahn's algorithm with lowest-index tie-breaking.
WitnessResult closedFiltrationWitness(const CellComplex& x, const Partition& p);

bool checkWitness(const CellComplex& x, const Partition& p,
                  const ClosedFiltrationWitness& w);

// Least upper bound in the refinement order: nonempty pairwise intersections.
Partition commonRefinement(const CellComplex& x, const Partition& a,
                           const Partition& b);

// True when every part of `coarse` is a union of parts of `fine`.
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace epsc

#endif
