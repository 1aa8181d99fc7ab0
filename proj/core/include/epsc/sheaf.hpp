#ifndef EPSC_SHEAF_HPP
#define EPSC_SHEAF_HPP

#include <map>
#include <utility>
#include <vector>

#include "epsc/cellcomplex.hpp"
#include "epsc/complex.hpp"
#include "epsc/partition.hpp"

namespace epsc {

// A cellular sheaf: a stalk complex per cell and a degreewise generization
// map per codimension-1 face relation sigma < tau.  Maps carry no incidence
// signs; signs live only in the sections differential.
class CellularSheaf {
 public:
  CellularSheaf() = default;  // empty sheaf over Q
  CellularSheaf(FieldSpec f, std::vector<BoundedComplex> stalks,
                std::map<std::pair<int, int>, std::map<int, Matrix>> maps);

  const FieldSpec& field() const { return f_; }
  int numStalks() const { return static_cast<int>(stalks_.size()); }
  const BoundedComplex& stalk(int cell) const { return stalks_.at(cell); }
  // The degree-n component of rho_{sigma tau}; zero-shaped when unrecorded.
  Matrix generization(int sigma, int tau, int n) const;
  const std::map<std::pair<int, int>, std::map<int, Matrix>>& maps() const {
    return maps_;
  }

 private:
  FieldSpec f_;
  std::vector<BoundedComplex> stalks_;
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps_;
};

struct SheafReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks that every generization map is a chain map and that all
// codimension-2 squares commute.
SheafReport validateSheaf(const CellComplex& x, const CellularSheaf& f);

// The constant sheaf with stalk k^rank in degree 0 and identity maps.
CellularSheaf constantSheaf(const CellComplex& x, FieldSpec f, int rank = 1);

// Stalk k at one cell, zero elsewhere.
CellularSheaf skyscraperSheaf(const CellComplex& x, FieldSpec f, int cell,
                              int rank = 1);

// Cellular RGamma_c over a locally closed cell set: total complex with
// degree-n part  (+)_{sigma in S} stalk(sigma)^{n - dim sigma}  in canonical
// cell order, differential  [sigma:tau] rho + (-1)^{dim sigma} d_stalk.
// Basis labels are "<cellname>@<stalk degree>#<index>", so pieces of a
// partition can be matched against the ambient complex literally.
BoundedComplex sectionsComplex(const CellComplex& x, const CellularSheaf& f,
                               const CellSet& s);

struct FiltrationGr {
  std::vector<BoundedComplex> pieces;  // sectionsComplex per part, witness order
  Scalar regroupingSign;  // Koszul sign of degree-major -> piece-major order
};

// Graded pieces of the closed filtration attached to a witness-bearing
// partition, plus the sign of regrouping the ambient basis into the pieces.
FiltrationGr filtrationGr(const CellComplex& x, const CellularSheaf& f,
                          const Partition& p,
                          const ClosedFiltrationWitness& w);

// chi(stalk) per cell.
std::vector<long long> eulerFunction(const CellComplex& x,
                                     const CellularSheaf& f);

// Sum over S of (-1)^dim sigma * chi(stalk(sigma)) = chi(RGamma_c(S)).
long long globalEuler(const CellComplex& x, const CellularSheaf& f,
                      const CellSet& s);

}  // namespace epsc

#endif
