#include "epsc/morse.hpp"

#include <algorithm>
#include <numeric>

namespace epsc {

PLFunction::PLFunction(std::vector<Rational> values)
    : values_(std::move(values)) {
  std::vector<Rational> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("PL function values must be pairwise distinct");
}

std::vector<int> PLFunction::verticesByValue() const {
  std::vector<int> v(values_.size());
  std::iota(v.begin(), v.end(), 0);
  std::sort(v.begin(), v.end(),
            [this](int a, int b) { return values_[a] < values_[b]; });
  return v;
}

CellSet lowerStar(const CellComplex& x, const PLFunction& f, int v) {
  if (f.numVertices() != x.numVertices())
    throw Error("PL function vertex count mismatch");
  CellSet s;
  for (int i = 0; i < x.numCells(); ++i) {
    const Cell& c = x.cell(i);
    int argmax = c[0];
    for (int w : c)
      if (f.value(w) > f.value(argmax)) argmax = w;
    if (argmax == v) s.insert(i);
  }
  return s;
}

MorseDatum morseComplex(const CellComplex& x, const CellularSheaf& f,
                        const PLFunction& fn, int v) {
  MorseDatum d;
  d.vertex = v;
  d.star = lowerStar(x, fn, v);
  d.complex = sectionsComplex(x, f, d.star);
  d.chi = eulerCharacteristic(d.complex);
  return d;
}

MorseFiltration morseFiltration(const CellComplex& x, const CellularSheaf& f,
                                const PLFunction& fn) {
  MorseFiltration out;
  out.partition.ambient = fullCellSet(x);
  std::vector<int> order = fn.verticesByValue();
  for (int v : order) {
    out.data.push_back(morseComplex(x, f, fn, v));
    out.partition.parts.push_back(out.data.back().star);
  }
  // Lower stars in increasing f order form a closed filtration: the frontier
  // of a lower star consists of cells with strictly smaller maximal value.
  out.witness.order.resize(order.size());
  std::iota(out.witness.order.begin(), out.witness.order.end(), 0);
  FiltrationGr gr = filtrationGr(x, f, out.partition, out.witness);
  out.regroupingSign = gr.regroupingSign;
  return out;
}

BoundedComplex morseComplexUV(const CellComplex& x, const CellularSheaf& f,
                              const CellSet& u, const CellSet& v) {
  SetClass cu = classify(x, u), cv = classify(x, v);
  if (!cu.open || !cv.open) throw Error("U and V must be open cell sets");
  for (int i : u)
    if (v.count(i)) throw Error("U and V must be disjoint");
  CellSet w;
  for (int i = 0; i < x.numCells(); ++i)
    if (!u.count(i) && !v.count(i)) w.insert(i);
  if (w.empty()) return BoundedComplex(f.field());
  return sectionsComplex(x, f, w);
}

}  // namespace epsc
