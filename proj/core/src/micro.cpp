#include "epsc/micro.hpp"

#include <algorithm>

namespace epsc {

namespace {

int otherEndpoint(const CellComplex& x, int edge, int v) {
  const Cell& c = x.cell(edge);
  return c[0] == v ? c[1] : c[0];
}

int terminalOf(const OrientationField& nu, int edge) {
  auto it = nu.terminal.find(edge);
  if (it == nu.terminal.end())
    throw Error("orientation missing for edge index " + std::to_string(edge));
  return it->second;
}

// Incident edges of v with terminal v.
std::vector<int> incomingEdges(const CellComplex& x, const OrientationField& nu,
                               int v) {
  std::vector<int> in;
  for (int e : x.cofacets(x.vertexCell(v)))
    if (terminalOf(nu, e) == v) in.push_back(e);
  return in;
}

}  // namespace

void validateOrientation(const CellComplex& x, const OrientationField& nu,
                         const MarkedVertexSet& y) {
  if (!x.isClosed1Manifold())
    throw Error("orientation fields live on closed 1-manifolds");
  for (int v : y)
    if (v < 0 || v >= x.numVertices())
      throw Error("marked vertex out of range");
  for (int i = 0; i < x.numCells(); ++i) {
    if (x.dim(i) != 1) continue;
    int t = terminalOf(nu, i);
    const Cell& c = x.cell(i);
    if (t != c[0] && t != c[1])
      throw Error("terminal vertex not an endpoint of edge " + x.cellName(i));
  }
  for (int v = 0; v < x.numVertices(); ++v) {
    if (y.count(v)) continue;
    if (incomingEdges(x, nu, v).size() != 1)
      throw Error("field vanishes at unmarked vertex " + std::to_string(v));
  }
}

TransversalReport checkTransversal(const CellComplex& x,
                                   const CellularSheaf& f,
                                   const OrientationField& nu,
                                   const MarkedVertexSet& y) {
  validateOrientation(x, nu, y);
  TransversalReport rep;
  for (int v = 0; v < x.numVertices(); ++v) {
    if (y.count(v)) continue;
    int eIn = incomingEdges(x, nu, v)[0];
    CellSet lens{x.vertexCell(v), eIn};
    if (!cohomology(sectionsComplex(x, f, lens)).allZero()) {
      rep.ok = false;
      rep.violations.push_back(v);
    }
  }
  return rep;
}

std::vector<CellSet> lensArcs(const CellComplex& x, const OrientationField& nu,
                              const MarkedVertexSet& y) {
  validateOrientation(x, nu, y);
  if (y.empty()) throw Error("lens arcs need a nonempty marked set");
  std::vector<CellSet> arcs;
  for (int yv : y) {
    CellSet arc{x.vertexCell(yv)};
    for (int e0 : incomingEdges(x, nu, yv)) {
      int e = e0;
      int w = otherEndpoint(x, e, yv);
      arc.insert(e);
      while (!y.count(w)) {
        arc.insert(x.vertexCell(w));
        // The other edge at w carries the flow into w.
        int next = -1;
        for (int c : x.cofacets(x.vertexCell(w)))
          if (c != e) next = c;
        e = next;
        arc.insert(e);
        w = otherEndpoint(x, e, w);
      }
    }
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

EpsilonFactor epsilonFactor(const CellComplex& x, const CellularSheaf& f,
                            const OrientationField& nu,
                            const MarkedVertexSet& y, int vertex) {
  if (!y.count(vertex)) throw Error("epsilon factor at an unmarked vertex");
  TransversalReport t = checkTransversal(x, f, nu, y);
  if (!t.ok) {
    std::string msg = "transversality fails at vertices:";
    for (int v : t.violations) msg += " " + std::to_string(v);
    throw Error(msg);
  }
  std::vector<CellSet> arcs = lensArcs(x, nu, y);
  EpsilonFactor out;
  out.vertex = vertex;
  int k = static_cast<int>(std::distance(y.begin(), y.find(vertex)));
  out.arc = arcs[k];
  out.complex = sectionsComplex(x, f, out.arc);
  out.cohomology = cohomology(out.complex);
  out.line = detLine(out.complex);
  return out;
}

EpsilonFactorization epsilonFactorization(const CellComplex& x,
                                          const CellularSheaf& f,
                                          const OrientationField& nu,
                                          const MarkedVertexSet& y) {
  EpsilonFactorization out;
  FieldSpec k = f.field();
  for (int yv : y) out.factors.push_back(epsilonFactor(x, f, nu, y, yv));
  BoundedComplex ambient = sectionsComplex(x, f, fullCellSet(x));
  CohomologyData ambientH = cohomology(ambient);
  // Sign transporting the torsion of the ambient complex to the product of
  // factor torsions: per-degree permutation sign of reordering the ambient
  // basis into the arc-major order (factors ascending by marked vertex, each
  // degree-major), times the adapted-basis shuffle sign of the iterated
  // block decomposition.
  std::map<std::string, int> sourceIndex;
  std::vector<int> degrees;
  for (int n = ambient.lo(); n <= ambient.hi(); ++n)
    for (const std::string& lab : ambient.labels(n)) {
      sourceIndex[lab] = static_cast<int>(degrees.size());
      degrees.push_back(n);
    }
  std::vector<int> perm;
  for (const EpsilonFactor& fac : out.factors)
    for (int n = fac.complex.lo(); n <= fac.complex.hi(); ++n)
      for (const std::string& lab : fac.complex.labels(n)) {
        auto it = sourceIndex.find(lab);
        if (it == sourceIndex.end())
          throw Error("factor basis element missing from ambient: " + lab);
        perm.push_back(it->second);
      }
  if (perm.size() != degrees.size())
    throw Error("arcs do not regroup the ambient basis");
  long long exponent = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && degrees[perm[i]] == degrees[perm[j]])
        ++exponent;
  // Adapted bases of a block complex come grouped as [boundaries |
  // representatives | lifts] per block; merging blocks shuffles the groups,
  // with b_m = rank d_{m-1}, h_m, l_m = rank d_m per factor.
  for (std::size_t a = 0; a < out.factors.size(); ++a)
    for (std::size_t b = a + 1; b < out.factors.size(); ++b) {
      const BoundedComplex& ca = out.factors[a].complex;
      const BoundedComplex& cb = out.factors[b].complex;
      const CohomologyData& ha = out.factors[a].cohomology;
      const CohomologyData& hb = out.factors[b].cohomology;
      for (int m = std::min(ca.lo(), cb.lo()) - 1;
           m <= std::max(ca.hi(), cb.hi()) + 1; ++m) {
        long long bB = cb.differential(m - 1).rank();
        long long lA = ca.differential(m).rank();
        exponent += bB * (ha.h(m) + lA) + static_cast<long long>(hb.h(m)) * lA;
      }
    }
  out.regroupSign = signPow(k, exponent);
  out.scalar = out.regroupSign;
  for (const EpsilonFactor& fac : out.factors)
    out.scalar *= torsion(fac.complex, fac.cohomology);
  out.scalar /= torsion(ambient, ambientH);
  out.acyclic = ambientH.allZero();
  for (const EpsilonFactor& fac : out.factors)
    if (!fac.cohomology.allZero()) out.acyclic = false;
  return out;
}

LagrangianCycle1D characteristicCycle(const CellComplex& x,
                                      const CellularSheaf& f) {
  if (!x.isClosed1Manifold())
    throw Error("characteristic cycles live on closed 1-manifolds");
  LagrangianCycle1D cc;
  for (int i = 0; i < x.numCells(); ++i)
    if (x.dim(i) == 1)
      cc.edgeZeroSection[i] = eulerCharacteristic(f.stalk(i));
  for (int v = 0; v < x.numVertices(); ++v) {
    int vc = x.vertexCell(v);
    const std::vector<int>& edges = x.cofacets(vc);  // two, ascending index
    VertexCycleData d;
    d.zeroSection = eulerCharacteristic(f.stalk(vc));
    d.mPlus = eulerCharacteristic(sectionsComplex(x, f, {vc, edges[0]}));
    d.mMinus = eulerCharacteristic(sectionsComplex(x, f, {vc, edges[1]}));
    cc.vertex[v] = d;
  }
  return cc;
}

IndexBreakdown microlocalIndex(const CellComplex& x, const CellularSheaf& f,
                               const PLFunction& fn) {
  IndexBreakdown out;
  for (int v = 0; v < x.numVertices(); ++v) {
    MorseDatum d = morseComplex(x, f, fn, v);
    out.perVertex.emplace_back(v, d.chi);
    out.total += d.chi;
  }
  return out;
}

Subdivision subdivideEdge(const CellComplex& x, const CellularSheaf& f,
                          const OrientationField& nu, int edge) {
  if (edge < 0 || edge >= x.numCells() || x.dim(edge) != 1)
    throw Error("subdivision target is not an edge");
  if (!x.isClosed1Manifold())
    throw Error("edge subdivision implemented for 1-manifolds only");
  int a = x.cell(edge)[0], b = x.cell(edge)[1];
  int m = x.numVertices();
  std::vector<Cell> cells;
  for (int i = 0; i < x.numCells(); ++i)
    if (i != edge) cells.push_back(x.cell(i));
  cells.push_back({m});
  cells.push_back({a, m});
  cells.push_back({m, b});
  Subdivision out;
  out.complex = CellComplex::build(m + 1, cells);
  out.newVertex = m;
  const CellComplex& nx = out.complex;
  // Old cell index per new cell; the three fresh cells map to -1.
  std::vector<int> oldOf(nx.numCells(), -1);
  for (int i = 0; i < nx.numCells(); ++i) {
    const Cell& c = nx.cell(i);
    if (std::find(c.begin(), c.end(), m) == c.end()) oldOf[i] = x.indexOf(c);
  }
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < nx.numCells(); ++i)
    stalks.push_back(oldOf[i] >= 0 ? f.stalk(oldOf[i]) : f.stalk(edge));
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  const BoundedComplex& es = f.stalk(edge);
  auto identityOn = [&](int sigma, int tau) {
    for (int n = es.lo(); n <= es.hi(); ++n)
      maps[{sigma, tau}][n] = Matrix::identity(f.field(), es.rank(n));
  };
  int nva = nx.vertexCell(a), nvb = nx.vertexCell(b), nvm = nx.vertexCell(m);
  int eam = nx.indexOf({a, m}), emb = nx.indexOf({b, m});
  for (int tau = 0; tau < nx.numCells(); ++tau) {
    if (nx.dim(tau) != 1) continue;
    for (int sigma : nx.facets(tau)) {
      if (oldOf[tau] >= 0 && oldOf[sigma] >= 0) {
        for (int n = f.stalk(oldOf[sigma]).lo(); n <= f.stalk(oldOf[sigma]).hi();
             ++n)
          maps[{sigma, tau}][n] = f.generization(oldOf[sigma], oldOf[tau], n);
      }
    }
  }
  for (int n = f.stalk(x.vertexCell(a)).lo(); n <= f.stalk(x.vertexCell(a)).hi();
       ++n)
    maps[{nva, eam}][n] = f.generization(x.vertexCell(a), edge, n);
  for (int n = f.stalk(x.vertexCell(b)).lo(); n <= f.stalk(x.vertexCell(b)).hi();
       ++n)
    maps[{nvb, emb}][n] = f.generization(x.vertexCell(b), edge, n);
  identityOn(nvm, eam);
  identityOn(nvm, emb);
  out.sheaf = CellularSheaf(f.field(), std::move(stalks), std::move(maps));
  for (int i = 0; i < nx.numCells(); ++i)
    if (nx.dim(i) == 1 && oldOf[i] >= 0)
      out.nu.terminal[i] = terminalOf(nu, oldOf[i]);
  int t = terminalOf(nu, edge);
  if (t == b) {
    out.nu.terminal[eam] = m;
    out.nu.terminal[emb] = b;
  } else {
    out.nu.terminal[emb] = m;
    out.nu.terminal[eam] = a;
  }
  return out;
}

}  // namespace epsc
