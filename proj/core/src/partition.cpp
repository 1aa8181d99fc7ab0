#include "epsc/partition.hpp"

#include <algorithm>

namespace epsc {

namespace {

// Frontier of a part inside the ambient set: (cl(A) \ A) ∩ ambient.
CellSet frontierIn(const CellComplex& x, const CellSet& ambient,
                   const CellSet& a) {
  CellSet r;
  for (int i : closure(x, a))
    if (!a.count(i) && ambient.count(i)) r.insert(i);
  return r;
}

}  // namespace

void validatePartition(const CellComplex& x, const Partition& p) {
  if (!classify(x, p.ambient).locallyClosed)
    throw Error("partition ambient set is not locally closed");
  CellSet covered;
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    const CellSet& part = p.parts[k];
    if (part.empty())
      throw Error("empty partition part " + std::to_string(k));
    for (int i : part) {
      if (!p.ambient.count(i))
        throw Error("part " + std::to_string(k) + " leaves the ambient set");
      if (!covered.insert(i).second)
        throw Error("parts overlap at cell " + x.cellName(i));
    }
    if (!classify(x, part).locallyClosed)
      throw Error("part " + std::to_string(k) + " is not locally closed");
  }
  if (covered != p.ambient) throw Error("parts do not cover the ambient set");
}

WitnessResult closedFiltrationWitness(const CellComplex& x,
                                      const Partition& p) {
  int n = static_cast<int>(p.parts.size());
  std::vector<int> cellPart(x.numCells(), -1);
  for (int k = 0; k < n; ++k)
    for (int i : p.parts[k]) cellPart[i] = k;
  // Edge B -> A whenever B meets the frontier of A: B must come before A.
  std::vector<std::set<int>> succ(n);  // succ[b] = parts that must follow b
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a) {
    std::set<int> preds;
    for (int i : frontierIn(x, p.ambient, p.parts[a])) {
      int b = cellPart[i];
      if (b >= 0 && b != a) preds.insert(b);
    }
    for (int b : preds)
      if (succ[b].insert(a).second) ++indeg[a];
  }
  WitnessResult out;
  std::vector<int> deg = indeg;
  std::set<int> ready;
  for (int k = 0; k < n; ++k)
    if (deg[k] == 0) ready.insert(k);
  std::vector<int> order;
  while (!ready.empty()) {
    int k = *ready.begin();  // lowest index first
    ready.erase(ready.begin());
    order.push_back(k);
    for (int a : succ[k])
      if (--deg[a] == 0) ready.insert(a);
  }
  if (static_cast<int>(order.size()) == n) {
    out.witness = ClosedFiltrationWitness{std::move(order)};
    return out;
  }
  // Extract a cycle among the unplaced parts by walking predecessors.
  std::vector<char> stuck(n, 1);
  for (int k : order) stuck[k] = 0;
  std::vector<int> pred(n, -1);
  for (int b = 0; b < n; ++b)
    if (stuck[b])
      for (int a : succ[b])
        if (stuck[a] && pred[a] < 0) pred[a] = b;
  int start = -1;
  for (int k = 0; k < n && start < 0; ++k)
    if (stuck[k]) start = k;
  std::vector<int> seen(n, 0);
  int cur = start;
  while (cur >= 0 && !seen[cur]) {
    seen[cur] = 1;
    cur = pred[cur];
  }
  if (cur >= 0) {
    int c = cur;
    do {
      out.cycle.push_back(c);
      c = pred[c];
    } while (c != cur && c >= 0);
    std::reverse(out.cycle.begin(), out.cycle.end());
  }
  return out;
}

bool checkWitness(const CellComplex& x, const Partition& p,
                  const ClosedFiltrationWitness& w) {
  int n = static_cast<int>(p.parts.size());
  if (static_cast<int>(w.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    int part = w.order[k];
    if (part < 0 || part >= n || pos[part] >= 0) return false;
    pos[part] = k;
  }
  std::vector<int> cellPart(x.numCells(), -1);
  for (int k = 0; k < n; ++k)
    for (int i : p.parts[k]) cellPart[i] = k;
  for (int a = 0; a < n; ++a)
    for (int i : frontierIn(x, p.ambient, p.parts[a])) {
      int b = cellPart[i];
      if (b >= 0 && pos[b] >= pos[a]) return false;
    }
  return true;
}

Partition commonRefinement(const CellComplex& x, const Partition& a,
                           const Partition& b) {
  if (a.ambient != b.ambient)
    throw Error("common refinement of partitions with different ambients");
  Partition r;
  r.ambient = a.ambient;
  for (const CellSet& pa : a.parts)
    for (const CellSet& pb : b.parts) {
      CellSet meet;
      for (int i : pa)
        if (pb.count(i)) meet.insert(i);
      if (!meet.empty()) r.parts.push_back(std::move(meet));
    }
  (void)x;
  return r;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.ambient != coarse.ambient) return false;
  for (const CellSet& f : fine.parts) {
    bool inside = false;
    for (const CellSet& c : coarse.parts) {
      bool sub = true;
      for (int i : f)
        if (!c.count(i)) {
          sub = false;
          break;
        }
      if (sub) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace epsc
