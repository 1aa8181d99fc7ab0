#include "epsc/sheaf.hpp"

#include <algorithm>

namespace epsc {

CellularSheaf::CellularSheaf(
    FieldSpec f, std::vector<BoundedComplex> stalks,
    std::map<std::pair<int, int>, std::map<int, Matrix>> maps)
    : f_(f), stalks_(std::move(stalks)), maps_(std::move(maps)) {
  for (const auto& s : stalks_)
    if (!(s.field() == f_)) throw Error("stalk field mismatch");
  for (const auto& [key, comps] : maps_) {
    auto [sigma, tau] = key;
    if (sigma < 0 || sigma >= numStalks() || tau < 0 || tau >= numStalks())
      throw Error("generization map references a missing cell");
    for (const auto& [n, m] : comps) {
      if (!(m.field() == f_)) throw Error("generization map field mismatch");
      if (m.rows() != stalks_[tau].rank(n) || m.cols() != stalks_[sigma].rank(n))
        throw Error("generization map shape mismatch at degree " +
                    std::to_string(n));
    }
  }
}

Matrix CellularSheaf::generization(int sigma, int tau, int n) const {
  auto it = maps_.find({sigma, tau});
  if (it != maps_.end()) {
    auto jt = it->second.find(n);
    if (jt != it->second.end()) return jt->second;
  }
  return Matrix(f_, stalks_[tau].rank(n), stalks_[sigma].rank(n));
}

SheafReport validateSheaf(const CellComplex& x, const CellularSheaf& f) {
  SheafReport rep;
  auto fail = [&rep](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };
  if (f.numStalks() != x.numCells()) {
    fail("stalk count differs from cell count");
    return rep;
  }
  for (const auto& [key, comps] : f.maps()) {
    (void)comps;
    if (x.incidence(key.first, key.second) == 0)
      fail("map recorded for non-incident cells " + x.cellName(key.first) +
           " -> " + x.cellName(key.second));
  }
  // Chain maps: rho d = d rho degreewise.
  for (int tau = 0; tau < x.numCells(); ++tau)
    for (int sigma : x.facets(tau)) {
      const BoundedComplex& a = f.stalk(sigma);
      const BoundedComplex& b = f.stalk(tau);
      int lo = std::min(a.lo(), b.lo()) - 1;
      int hi = std::max(a.hi(), b.hi());
      for (int n = lo; n < hi; ++n)
        if (f.generization(sigma, tau, n + 1) * a.differential(n) !=
            b.differential(n) * f.generization(sigma, tau, n)) {
          fail("non-chain map " + x.cellName(sigma) + " -> " + x.cellName(tau) +
               " at degree " + std::to_string(n));
          break;
        }
    }
  // Path independence for codimension-2 pairs.
  for (int u = 0; u < x.numCells(); ++u) {
    if (x.dim(u) < 2 && x.facets(u).size() < 2) continue;
    std::map<int, std::vector<int>> through;  // codim-2 face -> intermediates
    for (int t : x.facets(u))
      for (int s : x.facets(t)) through[s].push_back(t);
    for (auto& [s, mids] : through) {
      std::sort(mids.begin(), mids.end());
      mids.erase(std::unique(mids.begin(), mids.end()), mids.end());
      if (mids.size() < 2) continue;
      const BoundedComplex& a = f.stalk(s);
      int lo = a.lo(), hi = a.hi();
      for (std::size_t k = 1; k < mids.size(); ++k)
        for (int n = lo; n <= hi; ++n)
          if (f.generization(mids[0], u, n) * f.generization(s, mids[0], n) !=
              f.generization(mids[k], u, n) * f.generization(s, mids[k], n)) {
            fail("non-commuting square between " + x.cellName(s) + " and " +
                 x.cellName(u));
            n = hi;
            k = mids.size() - 1;
          }
    }
  }
  return rep;
}

CellularSheaf constantSheaf(const CellComplex& x, FieldSpec f, int rank) {
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < x.numCells(); ++i)
    stalks.emplace_back(f, 0, std::vector<int>{rank}, std::vector<Matrix>{});
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  for (int tau = 0; tau < x.numCells(); ++tau)
    for (int sigma : x.facets(tau))
      maps[{sigma, tau}][0] = Matrix::identity(f, rank);
  return CellularSheaf(f, std::move(stalks), std::move(maps));
}

CellularSheaf skyscraperSheaf(const CellComplex& x, FieldSpec f, int cell,
                              int rank) {
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < x.numCells(); ++i) {
    std::vector<int> ranks{i == cell ? rank : 0};
    stalks.emplace_back(f, 0, std::move(ranks), std::vector<Matrix>{});
  }
  return CellularSheaf(f, std::move(stalks), {});
}

BoundedComplex sectionsComplex(const CellComplex& x, const CellularSheaf& f,
                               const CellSet& s) {
  if (!classify(x, s).locallyClosed)
    throw Error("sections over a set that is not locally closed");
  FieldSpec k = f.field();
  std::vector<int> cells(s.begin(), s.end());
  int lo = 0, hi = -1;
  bool any = false;
  for (int c : cells) {
    const BoundedComplex& st = f.stalk(c);
    if (st.isZero()) continue;
    int a = st.lo() + x.dim(c), b = st.hi() + x.dim(c);
    if (!any) {
      lo = a;
      hi = b;
      any = true;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
  if (!any) return BoundedComplex(k);
  // Offsets of each cell's block inside each total degree.
  auto blockOffset = [&](int n, int cell) {
    int off = 0;
    for (int c : cells) {
      if (c == cell) return off;
      off += f.stalk(c).rank(n - x.dim(c));
    }
    throw Error("cell not in section layout");
  };
  std::vector<int> ranks;
  std::vector<std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    int r = 0;
    std::vector<std::string> lab;
    for (int c : cells) {
      int q = n - x.dim(c);
      int rc = f.stalk(c).rank(q);
      r += rc;
      for (int i = 0; i < rc; ++i)
        lab.push_back(x.cellName(c) + "@" + std::to_string(q) + "#" +
                      std::to_string(i));
    }
    ranks.push_back(r);
    labels.push_back(std::move(lab));
  }
  std::vector<Matrix> diffs;
  for (int n = lo; n < hi; ++n) {
    Matrix d(k, ranks[n + 1 - lo], ranks[n - lo]);
    for (int c : cells) {
      int q = n - x.dim(c);
      int srcOff = blockOffset(n, c);
      // Internal stalk differential, with the total-complex sign.
      Matrix di = f.stalk(c).differential(q) * signPow(k, x.dim(c));
      int dstOff = blockOffset(n + 1, c);
      for (int i = 0; i < di.rows(); ++i)
        for (int j = 0; j < di.cols(); ++j)
          d.at(dstOff + i, srcOff + j) += di.at(i, j);
      // Sheaf direction: generization toward cofaces inside S.
      for (int t : x.cofacets(c)) {
        if (!s.count(t)) continue;
        Matrix rho =
            f.generization(c, t, q) * Scalar(k, x.incidence(c, t));
        int tOff = blockOffset(n + 1, t);
        for (int i = 0; i < rho.rows(); ++i)
          for (int j = 0; j < rho.cols(); ++j)
            d.at(tOff + i, srcOff + j) += rho.at(i, j);
      }
    }
    diffs.push_back(std::move(d));
  }
  return BoundedComplex(k, lo, std::move(ranks), std::move(diffs),
                        std::move(labels));
}

FiltrationGr filtrationGr(const CellComplex& x, const CellularSheaf& f,
                          const Partition& p,
                          const ClosedFiltrationWitness& w) {
  validatePartition(x, p);
  if (!checkWitness(x, p, w)) throw Error("invalid closed-filtration witness");
  FiltrationGr out;
  out.regroupingSign = one(f.field());
  BoundedComplex ambient = sectionsComplex(x, f, p.ambient);
  // Source order: ambient basis, degree-major.
  std::map<std::string, int> sourceIndex;
  std::vector<int> degrees;
  for (int n = ambient.lo(); n <= ambient.hi(); ++n)
    for (const std::string& lab : ambient.labels(n)) {
      sourceIndex[lab] = static_cast<int>(degrees.size());
      degrees.push_back(n);
    }
  // Target order: pieces in witness order, each degree-major.
  std::vector<int> perm;
  for (int part : w.order) {
    BoundedComplex piece = sectionsComplex(x, f, p.parts[part]);
    for (int n = piece.lo(); n <= piece.hi(); ++n)
      for (const std::string& lab : piece.labels(n)) {
        auto it = sourceIndex.find(lab);
        if (it == sourceIndex.end())
          throw Error("piece basis element missing from ambient: " + lab);
        perm.push_back(it->second);
      }
    out.pieces.push_back(std::move(piece));
  }
  if (perm.size() != degrees.size())
    throw Error("pieces do not regroup the ambient basis");
  out.regroupingSign = koszulPermutationSign(f.field(), degrees, perm);
  return out;
}

std::vector<long long> eulerFunction(const CellComplex& x,
                                     const CellularSheaf& f) {
  std::vector<long long> e;
  for (int i = 0; i < x.numCells(); ++i)
    e.push_back(eulerCharacteristic(f.stalk(i)));
  return e;
}

long long globalEuler(const CellComplex& x, const CellularSheaf& f,
                      const CellSet& s) {
  long long chi = 0;
  for (int i : s)
    chi += (x.dim(i) % 2 == 0 ? 1 : -1) * eulerCharacteristic(f.stalk(i));
  return chi;
}

}  // namespace epsc
