#include "epsc/verify.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "epsc/bundle.hpp"
#include "epsc/generate.hpp"

namespace epsc {

namespace {

// One trial's verdict: empty = pass; otherwise failure message plus an
// optional reproducer bundle.
struct TrialVerdict {
  std::string message;
  std::string reproducer;

  bool failed() const { return !message.empty(); }
};

using TrialFn = std::function<TrialVerdict(std::uint64_t seed, int trial)>;

SuiteResult runTrials(const std::string& suite, int trials, std::uint64_t seed,
                      int jobs, const TrialFn& fn) {
  SuiteResult out;
  out.suite = suite;
  out.seed = seed;
  out.trials = trials;
  std::vector<TrialVerdict> verdicts(static_cast<std::size_t>(trials));
  if (jobs <= 1) {
    for (int t = 0; t < trials; ++t) verdicts[t] = fn(seed, t);
  } else {
    std::mutex nextMutex;
    int next = 0;
    auto worker = [&] {
      for (;;) {
        int t;
        {
          std::lock_guard<std::mutex> lock(nextMutex);
          if (next >= trials) return;
          t = next++;
        }
        verdicts[t] = fn(seed, t);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (int t = 0; t < trials; ++t) {
    if (!verdicts[t].failed()) continue;
    ++out.failures;
    out.messages.push_back("trial " + std::to_string(t) + ": " +
                           verdicts[t].message);
    if (out.reproducer.empty()) out.reproducer = verdicts[t].reproducer;
  }
  return out;
}

FieldSpec pickField(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return primeField(2);
    case 1: return primeField(3);
    case 2: return primeField(5);
    default: return rationalField();
  }
}

CellComplex pickComplex(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return tetrahedronBoundary();
    case 1: return octahedronBoundary();
    case 2: return torusComplex7();
    default: return circleComplex(3 + static_cast<int>(rng.below(6)));
  }
}

std::string describe(const Bundle& b, const std::string& what) {
  return what + "\nreproducer bundle follows:\n" + bundleToJson(b);
}

// --- additivity: chi over witness partitions, gr pieces match parts -------

TrialVerdict additivityTrial(std::uint64_t seed, int trial) {
  Rng rng = Rng::forTrial(seed ^ 0xadd111ull, trial);
  CellComplex x = pickComplex(rng);
  FieldSpec f = pickField(rng);
  CellularSheaf sheaf = randomSheaf(x, f, 2, rng, 1);
  PLFunction fn = randomPLFunction(x.numVertices(), rng);
  Partition p;
  p.ambient = fullCellSet(x);
  for (int v : fn.verticesByValue()) p.parts.push_back(lowerStar(x, fn, v));
  WitnessResult w = closedFiltrationWitness(x, p);
  Bundle repro{f, x, sheaf, fn, std::nullopt, std::nullopt};
  if (!w.witness)
    return {describe(repro, "lower-star partition bears no witness"), {}};
  long long whole = eulerCharacteristic(sectionsComplex(x, sheaf, p.ambient));
  long long sum = 0;
  for (const CellSet& part : p.parts)
    sum += eulerCharacteristic(sectionsComplex(x, sheaf, part));
  if (whole != sum)
    return {describe(repro, "chi additivity fails: whole " +
                                std::to_string(whole) + " vs parts " +
                                std::to_string(sum)),
            bundleToJson(repro)};
  FiltrationGr gr = filtrationGr(x, sheaf, p, *w.witness);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    BoundedComplex direct =
        sectionsComplex(x, sheaf, p.parts[w.witness->order[i]]);
    if (!(gr.pieces[i] == direct))
      return {describe(repro, "filtration gr piece " + std::to_string(i) +
                                  " differs from the part's sections complex"),
              bundleToJson(repro)};
  }
  return {};
}

// --- morse-index: sum of Morse chi equals global chi ----------------------

TrialVerdict morseIndexTrial(std::uint64_t seed, int trial) {
  Rng rng = Rng::forTrial(seed ^ 0x3035e1ull, trial);
  CellComplex x = pickComplex(rng);
  FieldSpec f = pickField(rng);
  CellularSheaf sheaf = randomSheaf(x, f, 2, rng, 1);
  PLFunction fn = randomPLFunction(x.numVertices(), rng);
  long long sum = 0;
  for (int v = 0; v < x.numVertices(); ++v)
    sum += morseComplex(x, sheaf, fn, v).chi;
  long long whole =
      eulerCharacteristic(sectionsComplex(x, sheaf, fullCellSet(x)));
  if (sum != whole) {
    Bundle repro{f, x, sheaf, fn, std::nullopt, std::nullopt};
    return {describe(repro, "Morse index sum " + std::to_string(sum) +
                                " differs from chi " + std::to_string(whole)),
            bundleToJson(repro)};
  }
  return {};
}

// --- epsilon: factorization identity, chi additivity, invariance ----------

TrialVerdict epsilonTrial(std::uint64_t seed, int trial) {
  Rng rng = Rng::forTrial(seed ^ 0xe9511ull, trial);
  int n = 3 + static_cast<int>(rng.below(10));
  CellComplex x = circleComplex(n);
  FieldSpec f = pickField(rng);
  MarkedVertexSet y = randomMarkedSet(n, rng);
  while (y.size() < 2) y.insert(static_cast<int>(rng.below(n)));
  OrientationField nu = randomOrientation(x, y, rng);
  CellularSheaf sheaf = randomCircleSheaf(x, f, nu, y, 3, rng);
  Bundle repro{f, x, sheaf, std::nullopt, nu, y};
  TransversalReport tr = checkTransversal(x, sheaf, nu, y);
  if (!tr.ok)
    return {describe(repro, "generated sheaf is not transversal"),
            bundleToJson(repro)};
  EpsilonFactorization fac = epsilonFactorization(x, sheaf, nu, y);
  long long chi = 0;
  for (const EpsilonFactor& factor : fac.factors)
    chi += eulerCharacteristic(factor.complex);
  if (chi != globalEuler(x, sheaf, fullCellSet(x)))
    return {describe(repro, "factor chi sum differs from chi(X, F)"),
            bundleToJson(repro)};
  // Defining identity, recomputed.
  BoundedComplex ambient = sectionsComplex(x, sheaf, fullCellSet(x));
  Scalar expect = fac.regroupSign;
  for (const EpsilonFactor& factor : fac.factors)
    expect *= torsion(factor.complex, factor.cohomology);
  expect /= torsion(ambient, cohomology(ambient));
  if (!(fac.scalar == expect))
    return {describe(repro, "factorization scalar violates its identity"),
            bundleToJson(repro)};
  if (fac.acyclic) {
    // Subdivide a random edge: the scalar must not move.
    std::vector<int> edges;
    for (int i = 0; i < x.numCells(); ++i)
      if (x.dim(i) == 1) edges.push_back(i);
    int edge = edges[rng.below(edges.size())];
    Subdivision sub = subdivideEdge(x, sheaf, nu, edge);
    EpsilonFactorization refined =
        epsilonFactorization(sub.complex, sub.sheaf, sub.nu, y);
    if (!(refined.scalar == fac.scalar))
      return {describe(repro, "scalar moved under subdividing edge " +
                                  x.cellName(edge)),
              bundleToJson(repro)};
    // Enlarge Y by one unmarked vertex (the arcs refine).
    MarkedVertexSet bigger = y;
    for (int v = 0; v < n && bigger.size() == y.size(); ++v)
      if (!bigger.count(v)) bigger.insert(v);
    if (bigger.size() > y.size() &&
        checkTransversal(x, sheaf, nu, bigger).ok) {
      EpsilonFactorization more = epsilonFactorization(x, sheaf, nu, bigger);
      if (more.acyclic && !(more.scalar == fac.scalar))
        return {describe(repro, "scalar moved under enlarging the marked set"),
                bundleToJson(repro)};
    }
  }
  return {};
}

// --- lens: transversality verdict == acyclicity of every unmarked lens ----

TrialVerdict lensTrial(std::uint64_t seed, int trial) {
  Rng rng = Rng::forTrial(seed ^ 0x1e5e5ull, trial);
  int n = 3 + static_cast<int>(rng.below(4));
  CellComplex x = circleComplex(n);
  FieldSpec f = rng.coin() ? primeField(2) : rationalField();
  MarkedVertexSet y = randomMarkedSet(n, rng);
  OrientationField nu = randomOrientation(x, y, rng);
  // A generic sheaf: not transversal by construction, so both verdicts occur.
  CellularSheaf sheaf = randomSheaf(x, f, 2, rng, 0);
  Bundle repro{f, x, sheaf, std::nullopt, nu, y};
  TransversalReport rep = checkTransversal(x, sheaf, nu, y);
  // Brute force: recompute every unmarked half-open lens directly.
  std::vector<int> bad;
  for (int v = 0; v < n; ++v) {
    if (y.count(v)) continue;
    int vc = x.vertexCell(v);
    int eIn = -1;
    for (int e : x.cofacets(vc))
      if (nu.terminal.at(e) == v) eIn = e;
    CohomologyData h = cohomology(sectionsComplex(x, sheaf, {vc, eIn}));
    if (!h.allZero()) bad.push_back(v);
  }
  if (rep.ok != bad.empty() || rep.violations != bad)
    return {describe(repro, "transversality verdict disagrees with brute "
                            "lens enumeration"),
            bundleToJson(repro)};
  return {};
}

// --- signs: super sign algebra and torsion conventions --------------------

TrialVerdict signsTrial(std::uint64_t seed, int trial) {
  Rng rng = Rng::forTrial(seed ^ 0x516e5ull, trial);
  FieldSpec f = pickField(rng);
  std::ostringstream why;
  // swapSign: symmetry constraint squares to the identity.
  GradedSuperLine a(static_cast<int>(rng.range(-3, 3)), one(f));
  GradedSuperLine b(static_cast<int>(rng.range(-3, 3)), one(f));
  if (!(swapSign(a, b) == swapSign(b, a)) ||
      !(swapSign(a, b) * swapSign(b, a) == one(f))) {
    why << "swapSign is not an involution for degrees " << a.degree << ", "
        << b.degree;
    return {why.str(), {}};
  }
  // regroupingSign is a character: sign(p.q) = sign(p after q) * sign(q).
  int m = 2 + static_cast<int>(rng.below(4));
  std::vector<GradedBlock> blocks;
  for (int i = 0; i < m; ++i)
    blocks.push_back({static_cast<int>(rng.range(-3, 3)),
                      static_cast<int>(rng.below(3))});
  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) p1[i] = p2[i] = i;
  for (int i = m - 1; i > 0; --i) {
    std::swap(p1[i], p1[rng.below(i + 1)]);
    std::swap(p2[i], p2[rng.below(i + 1)]);
  }
  std::vector<GradedBlock> afterP2;
  for (int i = 0; i < m; ++i) afterP2.push_back(blocks[p2[i]]);
  std::vector<int> composed(m);
  for (int i = 0; i < m; ++i) composed[i] = p2[p1[i]];
  Scalar lhs = regroupingSign(f, blocks, composed);
  Scalar rhs = regroupingSign(f, afterP2, p1) * regroupingSign(f, blocks, p2);
  if (!(lhs == rhs)) {
    why << "regroupingSign fails multiplicativity on " << m << " blocks";
    return {why.str(), {}};
  }
  // Torsion conventions.
  Scalar val(f, 0);
  while (val.isZero()) val = Scalar(f, rng.range(1, 7));
  Matrix coneMap(f, 1, 1);
  coneMap.at(0, 0) = val;
  BoundedComplex cone(f, 0, {1, 1}, {coneMap});
  if (!(torsion(cone, cohomology(cone)) == val)) {
    why << "tau([k -> k]) != the map's scalar " << val.str();
    return {why.str(), {}};
  }
  // Direct-sum multiplicativity with the adapted-basis shuffle sign.
  auto randomAcyclic = [&](int shiftBy) {
    Matrix mm = randomInvertible(f, 1 + static_cast<int>(rng.below(3)), rng);
    std::vector<int> ranks{mm.rows(), mm.rows()};
    return shift(BoundedComplex(f, 0, ranks, {mm}), shiftBy);
  };
  BoundedComplex ca = randomAcyclic(static_cast<int>(rng.below(2)));
  BoundedComplex cb = randomAcyclic(static_cast<int>(rng.below(2)));
  BoundedComplex cab = directSum(ca, cb);
  long long e = 0;
  for (int deg = cab.lo() - 1; deg <= cab.hi() + 1; ++deg) {
    long long bB = cb.differential(deg - 1).rank();
    long long lA = ca.differential(deg).rank();
    e += bB * lA;
  }
  Scalar tab = torsion(cab, cohomology(cab));
  Scalar prod = signPow(f, e) * torsion(ca, cohomology(ca)) *
                torsion(cb, cohomology(cb));
  if (!(tab == prod)) {
    why << "direct-sum torsion sign mismatch";
    return {why.str(), {}};
  }
  return {};
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"additivity", "morse-index", "epsilon", "lens", "signs"};
}

SuiteResult runSuite(const std::string& name, int trials, std::uint64_t seed,
                     int jobs) {
  if (trials < 0) throw Error("trial count must be nonnegative");
  if (jobs < 1) jobs = 1;
  if (name == "additivity")
    return runTrials(name, trials, seed, jobs, additivityTrial);
  if (name == "morse-index")
    return runTrials(name, trials, seed, jobs, morseIndexTrial);
  if (name == "epsilon")
    return runTrials(name, trials, seed, jobs, epsilonTrial);
  if (name == "lens") return runTrials(name, trials, seed, jobs, lensTrial);
  if (name == "signs") return runTrials(name, trials, seed, jobs, signsTrial);
  throw Error("unknown verification suite: " + name);
}

}  // namespace epsc
