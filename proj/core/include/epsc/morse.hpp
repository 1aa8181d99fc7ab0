#ifndef EPSC_MORSE_HPP
#define EPSC_MORSE_HPP

#include "epsc/sheaf.hpp"

namespace epsc {

// A generic PL function: one exact rational value per vertex, all distinct.
class PLFunction {
 public:
  explicit PLFunction(std::vector<Rational> values);

  int numVertices() const { return static_cast<int>(values_.size()); }
  const Rational& value(int v) const { return values_.at(v); }
  const std::vector<Rational>& values() const { return values_; }
  // Vertices sorted by increasing value.
  std::vector<int> verticesByValue() const;

 private:
  std::vector<Rational> values_;
};

// Cells whose f-maximal vertex is v.  The lower stars over all vertices
// partition the cells; each is locally closed.
CellSet lowerStar(const CellComplex& x, const PLFunction& f, int v);

struct MorseDatum {
  int vertex = -1;
  CellSet star;
  BoundedComplex complex;
  long long chi = 0;

  MorseDatum() : complex(rationalField()) {}
};

// M_v = sections over the lower star of v.
MorseDatum morseComplex(const CellComplex& x, const CellularSheaf& f,
                        const PLFunction& fn, int v);

struct MorseFiltration {
  std::vector<MorseDatum> data;      // increasing critical value
  Partition partition;               // lower stars, same order
  ClosedFiltrationWitness witness;   // the increasing-f ordering
  Scalar regroupingSign;             // det C(X) = (x)_v det M_v regrouping
};

MorseFiltration morseFiltration(const CellComplex& x, const CellularSheaf& f,
                                const PLFunction& fn);

// Middle layer of the 3-step filtration for disjoint open U, V: the interval
// complex on W = X \ (U u V).
BoundedComplex morseComplexUV(const CellComplex& x, const CellularSheaf& f,
                              const CellSet& u, const CellSet& v);

}  // namespace epsc

#endif
