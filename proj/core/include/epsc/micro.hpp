#ifndef EPSC_MICRO_HPP
#define EPSC_MICRO_HPP

#include "epsc/morse.hpp"
#include "epsc/sheaf.hpp"

namespace epsc {

// A combinatorial nowhere-vanishing covector field on a closed 1-manifold:
// each edge points at one of its two vertices (the terminal end).  Away from
// the marked set the field is continuous: every unmarked vertex is terminal
// for exactly one of its two incident edges.
struct OrientationField {
  std::map<int, int> terminal;  // edge cell index -> terminal vertex id
};

using MarkedVertexSet = std::set<int>;  // vertex ids

// Throws unless x is a closed 1-manifold and nu is valid off y.
void validateOrientation(const CellComplex& x, const OrientationField& nu,
                         const MarkedVertexSet& y);

struct TransversalReport {
  bool ok = true;
  std::vector<int> violations;  // vertex ids where the lens is not acyclic
};

// For every vertex v outside Y, tests acyclicity of the half-open lens
// {v, incoming edge}.  Empty report = the field avoids the micro-support.
TransversalReport checkTransversal(const CellComplex& x,
                                   const CellularSheaf& f,
                                   const OrientationField& nu,
                                   const MarkedVertexSet& y);

// Half-open arcs, one per marked vertex (ascending vertex id): {y} plus every
// open arc whose flow terminates at y.  They partition all cells.
std::vector<CellSet> lensArcs(const CellComplex& x, const OrientationField& nu,
                              const MarkedVertexSet& y);

struct EpsilonFactor {
  int vertex = -1;
  CellSet arc;
  BoundedComplex complex;
  CohomologyData cohomology;
  GradedSuperLine line;

  EpsilonFactor() : complex(rationalField()) {}
};

// det RGamma_c over the half-open arc at y.  Refuses to compute when
// transversality fails off Y.
EpsilonFactor epsilonFactor(const CellComplex& x, const CellularSheaf& f,
                            const OrientationField& nu,
                            const MarkedVertexSet& y, int vertex);

struct EpsilonFactorization {
  std::vector<EpsilonFactor> factors;  // ascending marked vertex id
  Scalar scalar;       // regroupSign * prod tau(factor) / tau(C(X))
  Scalar regroupSign;  // torsion-transport sign of the arc regrouping:
                       // per-degree permutation sign times the adapted-basis
                       // shuffle sign over ordered factor pairs
  bool acyclic = false;  // RGamma and all factors acyclic: scalar basis-free
};

EpsilonFactorization epsilonFactorization(const CellComplex& x,
                                          const CellularSheaf& f,
                                          const OrientationField& nu,
                                          const MarkedVertexSet& y);

struct VertexCycleData {
  long long zeroSection = 0;  // chi of the vertex stalk
  long long mPlus = 0;        // lens chi through the smaller-indexed edge
  long long mMinus = 0;       // lens chi through the larger-indexed edge
};

// Conormal and zero-section multiplicities on a closed 1-manifold.
struct LagrangianCycle1D {
  std::map<int, long long> edgeZeroSection;  // edge cell index -> chi
  std::map<int, VertexCycleData> vertex;     // vertex id -> multiplicities
};

LagrangianCycle1D characteristicCycle(const CellComplex& x,
                                      const CellularSheaf& f);

struct IndexBreakdown {
  long long total = 0;
  std::vector<std::pair<int, long long>> perVertex;  // (vertex, chi(M_v))
};

// Sum over vertices of chi(M_v(F, f)); equals chi(X, F) for generic f.
IndexBreakdown microlocalIndex(const CellComplex& x, const CellularSheaf& f,
                               const PLFunction& fn);

// Barycentric subdivision of one edge of a 1-manifold, transporting the
// sheaf (new stalks copy the edge stalk, new maps are identities) and the
// orientation field.  The new vertex gets id = old vertex count.
struct Subdivision {
  CellComplex complex;
  CellularSheaf sheaf;
  OrientationField nu;
  int newVertex = -1;
};

Subdivision subdivideEdge(const CellComplex& x, const CellularSheaf& f,
                          const OrientationField& nu, int edge);

}  // namespace epsc

#endif
