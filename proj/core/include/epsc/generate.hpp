#ifndef EPSC_GENERATE_HPP
#define EPSC_GENERATE_HPP

#include "epsc/micro.hpp"
#include "epsc/rng.hpp"

namespace epsc {

// Fixed complexes.
CellComplex circleComplex(int n);       // n >= 3 vertices
CellComplex tetrahedronBoundary();      // S^2, 4+6+4 cells
CellComplex octahedronBoundary();       // S^2, 6+12+8 cells
CellComplex torusComplex7();            // 7-vertex triangulated torus

// All edges of the n-circle flow i -> i+1 (mod n).
OrientationField uniformOrientation(const CellComplex& circle);
// A random field valid off y: marked vertices get random edge directions,
// the open arcs between them flow toward a random end.
OrientationField randomOrientation(const CellComplex& circle,
                                   const MarkedVertexSet& y, Rng& rng);

// Random nonempty marked set on m vertices.
MarkedVertexSet randomMarkedSet(int m, Rng& rng);

// Random invertible n x n matrix (unit L * unit U * permutation).
Matrix randomInvertible(FieldSpec f, int n, Rng& rng);
// Random matrix with small integer entries.
Matrix randomMatrixOfShape(FieldSpec f, int rows, int cols, Rng& rng);

// Random circle sheaf with degree-0 stalks, transversal off y by
// construction: at every unmarked vertex the generization toward the
// incoming edge is invertible (so every unmarked lens is acyclic).
CellularSheaf randomCircleSheaf(const CellComplex& circle, FieldSpec f,
                                const OrientationField& nu,
                                const MarkedVertexSet& y, int maxRank,
                                Rng& rng);

// Rank-r local system on the n-circle: all stalks k^r, all generizations
// the identity except one edge carrying the monodromy.
CellularSheaf localSystemCircle(const CellComplex& circle, FieldSpec f,
                                const Matrix& monodromy);

// Random valid sheaf on an arbitrary complex: a gauged direct sum of
// constant sheaves on open stars (extension by zero) and cell skyscrapers,
// with randomly shifted stalk degrees.
CellularSheaf randomSheaf(const CellComplex& x, FieldSpec f, int maxRank,
                          Rng& rng, int maxShift = 0);

// m pairwise distinct rationals.
PLFunction randomPLFunction(int m, Rng& rng);

}  // namespace epsc

#endif
