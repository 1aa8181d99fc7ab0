#include "epsc/generate.hpp"

#include <algorithm>
#include <numeric>

namespace epsc {

CellComplex circleComplex(int n) {
  if (n < 3) throw Error("a simplicial circle needs at least 3 vertices");
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) cells.push_back({i});
  for (int i = 0; i + 1 < n; ++i) cells.push_back({i, i + 1});
  cells.push_back({0, n - 1});
  return CellComplex::build(n, cells);
}

CellComplex tetrahedronBoundary() {
  std::vector<Cell> cells;
  for (int i = 0; i < 4; ++i) cells.push_back({i});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cells.push_back({i, j});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) cells.push_back({i, j, k});
  return CellComplex::build(4, cells);
}

CellComplex octahedronBoundary() {
  // Vertices 0/1, 2/3, 4/5 are antipodal pairs; faces avoid antipodes.
  std::vector<Cell> cells;
  for (int i = 0; i < 6; ++i) cells.push_back({i});
  auto antipodal = [](int a, int b) { return a / 2 == b / 2; };
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!antipodal(i, j)) cells.push_back({i, j});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        if (!antipodal(i, j) && !antipodal(i, k) && !antipodal(j, k))
          cells.push_back({i, j, k});
  return CellComplex::build(6, cells);
}

CellComplex torusComplex7() {
  // The Moebius-Kantor triangulation: faces {i, i+1, i+3} and {i, i+2, i+3}
  // mod 7 give a 7-vertex torus (14 triangles, 21 edges, chi = 0).
  std::set<Cell> cells;
  for (int i = 0; i < 7; ++i) {
    Cell a{i, (i + 1) % 7, (i + 3) % 7};
    Cell b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    cells.insert(a);
    cells.insert(b);
  }
  std::set<Cell> all;
  for (const Cell& c : cells) {
    all.insert(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      Cell f = c;
      f.erase(f.begin() + static_cast<long>(i));
      all.insert(f);
      for (std::size_t j = 0; j < f.size(); ++j) {
        Cell g = f;
        g.erase(g.begin() + static_cast<long>(j));
        all.insert(g);
      }
    }
  }
  return CellComplex::build(7, std::vector<Cell>(all.begin(), all.end()));
}

namespace {

// Cyclic vertex orders of the components of a closed 1-manifold.
std::vector<std::vector<int>> componentCycles(const CellComplex& x) {
  std::vector<char> seen(x.numVertices(), 0);
  std::vector<std::vector<int>> cycles;
  for (int v0 = 0; v0 < x.numVertices(); ++v0) {
    if (seen[v0]) continue;
    std::vector<int> cyc;
    int v = v0, prevEdge = -1;
    do {
      seen[v] = 1;
      cyc.push_back(v);
      int nextEdge = -1;
      for (int e : x.cofacets(x.vertexCell(v)))
        if (e != prevEdge) nextEdge = e;
      const Cell& c = x.cell(nextEdge);
      prevEdge = nextEdge;
      v = (c[0] == v) ? c[1] : c[0];
    } while (v != v0);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

OrientationField uniformOrientation(const CellComplex& circle) {
  if (!circle.isClosed1Manifold())
    throw Error("uniform orientation needs a closed 1-manifold");
  OrientationField nu;
  for (const std::vector<int>& cyc : componentCycles(circle)) {
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      nu.terminal[circle.indexOf({std::min(a, b), std::max(a, b)})] = b;
    }
  }
  return nu;
}

OrientationField randomOrientation(const CellComplex& circle,
                                   const MarkedVertexSet& y, Rng& rng) {
  if (!circle.isClosed1Manifold())
    throw Error("orientation fields need a closed 1-manifold");
  OrientationField nu;
  for (const std::vector<int>& cyc : componentCycles(circle)) {
    int k = static_cast<int>(cyc.size());
    std::vector<int> marks;
    for (int i = 0; i < k; ++i)
      if (y.count(cyc[i])) marks.push_back(i);
    auto setEdge = [&](int i, bool forward) {
      int a = cyc[i], b = cyc[(i + 1) % k];
      nu.terminal[circle.indexOf({std::min(a, b), std::max(a, b)})] =
          forward ? b : a;
    };
    if (marks.empty()) {
      bool forward = rng.coin();
      for (int i = 0; i < k; ++i) setEdge(i, forward);
    } else {
      // Each open segment between consecutive marked vertices flows
      // uniformly toward one of its ends.
      for (std::size_t s = 0; s < marks.size(); ++s) {
        int from = marks[s];
        int to = marks[(s + 1) % marks.size()];
        int len = (to - from + k) % k;
        if (len == 0) len = k;
        bool forward = rng.coin();
        for (int t = 0; t < len; ++t) setEdge((from + t) % k, forward);
      }
    }
  }
  return nu;
}

MarkedVertexSet randomMarkedSet(int m, Rng& rng) {
  if (m <= 0) throw Error("marked set needs vertices");
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  for (int i = m - 1; i > 0; --i)
    std::swap(all[i], all[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
  return MarkedVertexSet(all.begin(), all.begin() + count);
}

Matrix randomInvertible(FieldSpec f, int n, Rng& rng) {
  Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j) l.at(i, j) = Scalar(f, rng.range(-2, 2));
      if (i < j) u.at(i, j) = Scalar(f, rng.range(-2, 2));
      if (i == j) {
        // The draw must be a unit in the field (2 vanishes over F_2).
        Scalar d(f, 0);
        while (d.isZero())
          d = Scalar(f, rng.range(1, 2) * (rng.coin() ? 1 : -1));
        u.at(i, j) = d;
      }
    }
  Matrix p(f, n, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  for (int i = 0; i < n; ++i) p.at(i, perm[i]) = one(f);
  return p * l * u;
}

Matrix randomMatrixOfShape(FieldSpec f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, rng.range(-2, 2));
  return m;
}

namespace {

BoundedComplex singleDegreeStalk(FieldSpec f, int degree, int rank) {
  if (rank == 0) return BoundedComplex(f);
  std::vector<int> ranks(1, rank);
  BoundedComplex c(f, degree, ranks, {});
  return c;
}

}  // namespace

CellularSheaf randomCircleSheaf(const CellComplex& circle, FieldSpec f,
                                const OrientationField& nu,
                                const MarkedVertexSet& y, int maxRank,
                                Rng& rng) {
  validateOrientation(circle, nu, y);
  std::vector<int> rank(circle.numCells(), 0);
  for (int i = 0; i < circle.numCells(); ++i)
    if (circle.dim(i) == 1)
      rank[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxRank) + 1));
  // Unmarked vertices copy the incoming-edge rank (the lens must be a cone
  // of an isomorphism); marked vertices are free.
  std::vector<int> inEdge(circle.numVertices(), -1);
  for (int v = 0; v < circle.numVertices(); ++v)
    for (int e : circle.cofacets(circle.vertexCell(v)))
      if (nu.terminal.at(e) == v && !y.count(v)) inEdge[v] = e;
  for (int v = 0; v < circle.numVertices(); ++v) {
    int vc = circle.vertexCell(v);
    if (y.count(v))
      rank[vc] =
          static_cast<int>(rng.below(static_cast<std::uint64_t>(maxRank) + 1));
    else
      rank[vc] = rank[inEdge[v]];
  }
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < circle.numCells(); ++i)
    stalks.push_back(singleDegreeStalk(f, 0, rank[i]));
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  for (int v = 0; v < circle.numVertices(); ++v) {
    int vc = circle.vertexCell(v);
    for (int e : circle.cofacets(vc)) {
      if (!y.count(v) && e == inEdge[v])
        maps[{vc, e}][0] = randomInvertible(f, rank[vc], rng);
      else
        maps[{vc, e}][0] = randomMatrixOfShape(f, rank[e], rank[vc], rng);
    }
  }
  return CellularSheaf(f, std::move(stalks), std::move(maps));
}

CellularSheaf localSystemCircle(const CellComplex& circle, FieldSpec f,
                                const Matrix& monodromy) {
  if (!circle.isClosed1Manifold() || monodromy.rows() != monodromy.cols())
    throw Error("local system needs a circle and a square monodromy");
  int r = monodromy.rows();
  Matrix check = monodromy;  // must be invertible
  check.inverse();
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < circle.numCells(); ++i)
    stalks.push_back(singleDegreeStalk(f, 0, r));
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  // The monodromy sits on the generization from the lowest vertex of the
  // lexicographically last edge; all other maps are identities.
  int carrier = -1;
  for (int i = 0; i < circle.numCells(); ++i)
    if (circle.dim(i) == 1) carrier = i;
  for (int tau = 0; tau < circle.numCells(); ++tau) {
    if (circle.dim(tau) != 1) continue;
    for (int sigma : circle.facets(tau)) {
      bool twist = (tau == carrier && circle.cell(sigma)[0] ==
                                          circle.cell(tau)[0]);
      maps[{sigma, tau}][0] = twist ? monodromy : Matrix::identity(f, r);
    }
  }
  return CellularSheaf(f, std::move(stalks), std::move(maps));
}

CellularSheaf randomSheaf(const CellComplex& x, FieldSpec f, int maxRank,
                          Rng& rng, int maxShift) {
  struct Summand {
    std::vector<char> support;  // per cell
    int degree = 0;
    int rank = 1;
  };
  int count = 1 + static_cast<int>(rng.below(3));
  std::vector<Summand> parts;
  for (int s = 0; s < count; ++s) {
    Summand p;
    p.support.assign(x.numCells(), 0);
    p.degree = maxShift > 0 ? static_cast<int>(rng.range(-maxShift, maxShift))
                            : 0;
    p.rank = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                     std::max(1, maxRank))));
    if (rng.coin() && x.numVertices() > 0) {
      // Constant sheaf on the open star of a vertex, extended by zero.
      int w = static_cast<int>(rng.below(x.numVertices()));
      for (int i = 0; i < x.numCells(); ++i) {
        const Cell& c = x.cell(i);
        if (std::find(c.begin(), c.end(), w) != c.end()) p.support[i] = 1;
      }
    } else {
      // Skyscraper on a single cell.
      p.support[rng.below(static_cast<std::uint64_t>(x.numCells()))] = 1;
    }
    parts.push_back(std::move(p));
  }
  // Per-cell ranks by degree; stalks have zero internal differentials.
  auto rankAt = [&](int cell, int n) {
    int r = 0;
    for (const Summand& p : parts)
      if (p.support[cell] && p.degree == n) r += p.rank;
    return r;
  };
  int dlo = 0, dhi = 0;
  for (const Summand& p : parts) {
    dlo = std::min(dlo, p.degree);
    dhi = std::max(dhi, p.degree);
  }
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < x.numCells(); ++i) {
    std::vector<int> ranks;
    for (int n = dlo; n <= dhi; ++n) ranks.push_back(rankAt(i, n));
    std::vector<Matrix> diffs;
    for (int n = dlo; n < dhi; ++n)
      diffs.emplace_back(f, rankAt(i, n + 1), rankAt(i, n));
    stalks.emplace_back(f, dlo, std::move(ranks), std::move(diffs));
  }
  // Random gauge per (cell, degree).
  std::map<std::pair<int, int>, Matrix> gauge, gaugeInv;
  for (int i = 0; i < x.numCells(); ++i)
    for (int n = dlo; n <= dhi; ++n) {
      int r = rankAt(i, n);
      if (r == 0) continue;
      Matrix g = randomInvertible(f, r, rng);
      gaugeInv[{i, n}] = g.inverse();
      gauge[{i, n}] = std::move(g);
    }
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  for (int tau = 0; tau < x.numCells(); ++tau)
    for (int sigma : x.facets(tau))
      for (int n = dlo; n <= dhi; ++n) {
        int rt = rankAt(tau, n), rs = rankAt(sigma, n);
        if (rt == 0 || rs == 0) continue;
        Matrix block(f, rt, rs);
        int ro = 0, co = 0;
        for (const Summand& p : parts) {
          if (p.degree != n) continue;
          bool inT = p.support[tau], inS = p.support[sigma];
          if (inT && inS)
            for (int d = 0; d < p.rank; ++d)
              block.at(ro + d, co + d) = one(f);
          if (inT) ro += p.rank;
          if (inS) co += p.rank;
        }
        maps[{sigma, tau}][n] =
            gauge.at({tau, n}) * block * gaugeInv.at({sigma, n});
      }
  return CellularSheaf(f, std::move(stalks), std::move(maps));
}

PLFunction randomPLFunction(int m, Rng& rng) {
  std::vector<Rational> vals;
  for (int v = 0; v < m; ++v) {
    long long base = rng.range(-50, 50);
    vals.push_back(Rational(base * (m + 1) + v, m + 1));
  }
  return PLFunction(std::move(vals));
}

}  // namespace epsc
