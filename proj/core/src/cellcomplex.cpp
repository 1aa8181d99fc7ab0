#include "epsc/cellcomplex.hpp"

#include <algorithm>
#include <map>

namespace epsc {

namespace {

std::string tupleName(const Cell& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(c[k]);
  }
  return s;
}

}  // namespace

CellComplex CellComplex::build(int numVertices, const std::vector<Cell>& cells) {
  if (numVertices < 0) throw Error("negative vertex count");
  std::set<Cell> seen;
  for (Cell c : cells) {
    if (c.empty()) throw Error("empty cell");
    for (int v : c)
      if (v < 0 || v >= numVertices)
        throw Error("vertex out of range in cell " + tupleName(c));
    Cell sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("repeated vertex in cell " + tupleName(c));
    if (!seen.insert(sorted).second)
      throw Error("duplicate cell " + tupleName(sorted));
  }
  // Face closure must hold: every facet of a listed cell is listed.
  for (const Cell& c : seen) {
    if (c.size() == 1) continue;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell face = c;
      face.erase(face.begin() + static_cast<long>(i));
      if (!seen.count(face))
        throw Error("missing face " + tupleName(face) + " of cell " +
                    tupleName(c));
    }
  }
  CellComplex x;
  x.numVertices_ = numVertices;
  x.cells_.assign(seen.begin(), seen.end());  // std::set orders lexicographically
  std::map<Cell, int> index;
  for (int i = 0; i < x.numCells(); ++i) index[x.cells_[i]] = i;
  x.facets_.resize(x.numCells());
  x.cofacets_.resize(x.numCells());
  for (int t = 0; t < x.numCells(); ++t) {
    const Cell& c = x.cells_[t];
    if (c.size() == 1) continue;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell face = c;
      face.erase(face.begin() + static_cast<long>(i));
      int s = index[face];
      x.facets_[t].push_back(s);
      x.cofacets_[s].push_back(t);
    }
  }
  for (auto& v : x.facets_) std::sort(v.begin(), v.end());
  for (auto& v : x.cofacets_) std::sort(v.begin(), v.end());
  // dd = 0: every codimension-2 subface is reached through exactly two
  // intermediate cells with cancelling signed products.
  for (int u = 0; u < x.numCells(); ++u) {
    if (x.dim(u) < 2) continue;
    std::map<int, int> sum;
    for (int t : x.facets_[u])
      for (int s : x.facets_[t]) sum[s] += x.incidence(s, t) * x.incidence(t, u);
    for (auto& [s, v] : sum)
      if (v != 0)
        throw Error("incidence products do not cancel between " +
                    x.cellName(s) + " and " + x.cellName(u));
  }
  return x;
}

int CellComplex::dimension() const {
  int d = -1;
  for (const Cell& c : cells_) d = std::max(d, static_cast<int>(c.size()) - 1);
  return d;
}

int CellComplex::indexOf(const Cell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return static_cast<int>(it - cells_.begin());
}

int CellComplex::vertexCell(int v) const {
  int i = indexOf({v});
  if (i < 0) throw Error("vertex " + std::to_string(v) + " not in complex");
  return i;
}

int CellComplex::incidence(int sigma, int tau) const {
  const Cell& s = cells_[sigma];
  const Cell& t = cells_[tau];
  if (s.size() + 1 != t.size()) return 0;
  int omitted = -1;
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (i < s.size() && s[i] == t[j]) {
      ++i;
    } else if (omitted < 0) {
      omitted = static_cast<int>(j);
    } else {
      return 0;
    }
  }
  if (i != s.size() || omitted < 0) return 0;
  return omitted % 2 == 0 ? 1 : -1;
}

bool CellComplex::isClosed1Manifold() const {
  if (cells_.empty()) return false;
  for (int i = 0; i < numCells(); ++i)
    if (dim(i) > 1) return false;
  for (int v = 0; v < numVertices_; ++v) {
    int i = indexOf({v});
    if (i < 0) return false;
    if (cofacets_[i].size() != 2) return false;
  }
  return true;
}

std::string CellComplex::cellName(int i) const { return tupleName(cells_[i]); }

SetClass classify(const CellComplex& x, const CellSet& s) {
  SetClass r;
  r.closed = true;
  r.open = true;
  for (int i : s) {
    for (int f : x.facets(i))
      if (!s.count(f)) r.closed = false;
    for (int c : x.cofacets(i))
      if (!s.count(c)) r.open = false;
  }
  // Interval condition via codimension-1 chains: sigma <= tau <= upsilon with
  // the ends inside forces tau inside.
  r.locallyClosed = true;
  for (int t = 0; t < x.numCells(); ++t) {
    if (s.count(t)) continue;
    bool faceIn = false, cofaceIn = false;
    CellSet below = closure(x, {t});
    for (int b : below)
      if (s.count(b)) faceIn = true;
    // coface-closure of {t}
    CellSet above = {t};
    bool grew = true;
    while (grew) {
      grew = false;
      CellSet next = above;
      for (int a : above)
        for (int c : x.cofacets(a))
          if (next.insert(c).second) grew = true;
      above = next;
    }
    for (int a : above)
      if (s.count(a)) cofaceIn = true;
    if (faceIn && cofaceIn) {
      r.locallyClosed = false;
      break;
    }
  }
  if (r.open || r.closed) r.locallyClosed = true;
  return r;
}

CellSet closure(const CellComplex& x, const CellSet& s) {
  CellSet r = s;
  bool grew = true;
  while (grew) {
    grew = false;
    CellSet next = r;
    for (int i : r)
      for (int f : x.facets(i))
        if (next.insert(f).second) grew = true;
    r = next;
  }
  return r;
}

CellSet interiorCells(const CellComplex& x, const CellSet& s) {
  // Largest coface-closed subset: drop cells with a coface outside until
  // stable.
  CellSet r = s;
  bool shrank = true;
  while (shrank) {
    shrank = false;
    CellSet next;
    for (int i : r) {
      bool keep = true;
      for (int c : x.cofacets(i))
        if (!r.count(c)) keep = false;
      if (keep)
        next.insert(i);
      else
        shrank = true;
    }
    r = next;
  }
  return r;
}

CellSet fullCellSet(const CellComplex& x) {
  CellSet r;
  for (int i = 0; i < x.numCells(); ++i) r.insert(i);
  return r;
}

}  // namespace epsc
