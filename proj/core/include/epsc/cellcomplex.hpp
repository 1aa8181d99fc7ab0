#ifndef EPSC_CELLCOMPLEX_HPP
#define EPSC_CELLCOMPLEX_HPP

#include <set>
#include <string>
#include <vector>

#include "epsc/scalar.hpp"

namespace epsc {

// A cell is a nonempty strictly increasing vertex tuple.
using Cell = std::vector<int>;

// A finite simplicial complex on vertices 0..m-1.  Cells are stored in
// lexicographic order of their vertex tuples; that order is the canonical
// basis order everywhere downstream.
class CellComplex {
 public:
  // Builds from an explicit cell list (faces need not be listed separately,
  // but if a face is missing and `requireClosed` the build fails).
  static CellComplex build(int numVertices, const std::vector<Cell>& cells);

  int numVertices() const { return numVertices_; }
  int numCells() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const { return cells_[i]; }
  int dim(int i) const { return static_cast<int>(cells_[i].size()) - 1; }
  int dimension() const;  // max cell dimension, -1 when empty
  int indexOf(const Cell& c) const;  // -1 when absent
  int vertexCell(int v) const;       // index of the 0-cell {v}

  // Incidence number [sigma:tau]: (-1)^i when sigma is tau minus its i-th
  // vertex, 0 when sigma is not a codimension-1 face of tau.
  int incidence(int sigma, int tau) const;
  // Codimension-1 faces / cofaces, as cell indices in canonical order.
  const std::vector<int>& facets(int tau) const { return facets_[tau]; }
  const std::vector<int>& cofacets(int sigma) const { return cofacets_[sigma]; }

  // Every cell is a vertex or an edge and every vertex has exactly two
  // incident edges.
  bool isClosed1Manifold() const;

  std::string cellName(int i) const;  // "0.1.2"

 private:
  int numVertices_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
};

// A subset of the cells of a fixed CellComplex, by canonical index.
using CellSet = std::set<int>;

struct SetClass {
  bool open = false;         // coface-closed
  bool closed = false;       // face-closed
  bool locallyClosed = false;  // interval condition
};

SetClass classify(const CellComplex& x, const CellSet& s);
CellSet closure(const CellComplex& x, const CellSet& s);
CellSet interiorCells(const CellComplex& x, const CellSet& s);
CellSet fullCellSet(const CellComplex& x);

}  // namespace epsc

#endif
