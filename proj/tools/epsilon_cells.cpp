// Command-line interface for the exact cellular-sheaf calculator.
//
// Subcommands operate on a JSON bundle (complex + sheaf + optional
// decorations) and print a human-readable report or, with --json, a
// machine-readable one.  Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include <epsc/bundle.hpp>
#include <epsc/generate.hpp>
#include <epsc/verify.hpp>

using namespace epsc;
using nlohmann::json;

namespace {

std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("EPSILON_CELLS_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

struct Options {
  std::string bundlePath;
  bool jsonOut = false;
  std::uint64_t seed = 0;
  int trials = 100;
  int jobs = 1;
  std::string points;  // epsilon: comma list of vertices, or "all"
};

json cohomologyJson(const BoundedComplex& c) {
  CohomologyData h = cohomology(c);
  json dims;
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (h.h(n) > 0) dims[std::to_string(n)] = h.h(n);
  return dims;
}

MarkedVertexSet resolvePoints(const Bundle& b, const std::string& points) {
  if (points.empty()) {
    if (!b.marked) throw Error("no marked vertices: add \"marked\" to the "
                               "bundle or pass --points");
    return *b.marked;
  }
  MarkedVertexSet y;
  if (points == "all") {
    for (int v = 0; v < b.complex.numVertices(); ++v) y.insert(v);
    return y;
  }
  std::stringstream ss(points);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      y.insert(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("--points: \"" + tok + "\" is not a vertex id");
    }
  }
  if (y.empty()) throw Error("--points: empty vertex list");
  return y;
}

const OrientationField& requireOrientation(const Bundle& b) {
  if (!b.orientation)
    throw Error("this command needs an \"orientation\" field in the bundle");
  return *b.orientation;
}

const PLFunction& requireFunction(const Bundle& b) {
  if (!b.function)
    throw Error("this command needs a \"function\" field in the bundle");
  return *b.function;
}

json runDataCommand(const std::string& cmd, const Bundle& b,
                    const Options& opt) {
  json out;
  out["command"] = cmd;
  if (cmd == "check") {
    // parseBundle already validated; report the positive facts.
    out["cells"] = b.complex.numCells();
    out["dimension"] = b.complex.dimension();
    out["sheaf_valid"] = true;
    out["closed_1_manifold"] = b.complex.isClosed1Manifold();
  } else if (cmd == "cohomology") {
    BoundedComplex c = sectionsComplex(b.complex, b.sheaf,
                                       fullCellSet(b.complex));
    out["h"] = cohomologyJson(c);
    out["euler"] = eulerCharacteristic(c);
  } else if (cmd == "euler") {
    out["euler"] = globalEuler(b.complex, b.sheaf, fullCellSet(b.complex));
    json perCell;
    std::vector<long long> e = eulerFunction(b.complex, b.sheaf);
    for (int i = 0; i < b.complex.numCells(); ++i)
      perCell[b.complex.cellName(i)] = e[i];
    out["euler_function"] = std::move(perCell);
  } else if (cmd == "det") {
    BoundedComplex c = sectionsComplex(b.complex, b.sheaf,
                                       fullCellSet(b.complex));
    CohomologyData h = cohomology(c);
    GradedSuperLine line = detLine(c);
    out["line_degree"] = line.degree;
    out["h"] = cohomologyJson(c);
    out["torsion"] = torsion(c, h).str();
    out["acyclic"] = h.allZero();
  } else if (cmd == "morse") {
    const PLFunction& fn = requireFunction(b);
    MorseFiltration mf = morseFiltration(b.complex, b.sheaf, fn);
    json table = json::array();
    long long total = 0;
    for (const MorseDatum& d : mf.data) {
      json row;
      row["vertex"] = d.vertex;
      row["chi"] = d.chi;
      row["star_size"] = d.star.size();
      row["h"] = cohomologyJson(d.complex);
      table.push_back(std::move(row));
      total += d.chi;
    }
    out["critical_data"] = std::move(table);
    out["index_sum"] = total;
    out["regrouping_sign"] = mf.regroupingSign.str();
  } else if (cmd == "epsilon") {
    const OrientationField& nu = requireOrientation(b);
    MarkedVertexSet y = resolvePoints(b, opt.points);
    EpsilonFactorization fac = epsilonFactorization(b.complex, b.sheaf, nu, y);
    json table = json::array();
    for (const EpsilonFactor& factor : fac.factors) {
      json row;
      row["vertex"] = factor.vertex;
      json arc = json::array();
      for (int i : factor.arc) arc.push_back(b.complex.cellName(i));
      row["arc"] = std::move(arc);
      row["line_degree"] = factor.line.degree;
      row["h"] = cohomologyJson(factor.complex);
      row["torsion"] = torsion(factor.complex, factor.cohomology).str();
      table.push_back(std::move(row));
    }
    out["factors"] = std::move(table);
    out["scalar"] = fac.scalar.str();
    out["regrouping_sign"] = fac.regroupSign.str();
    out["acyclic"] = fac.acyclic;
  } else if (cmd == "cc") {
    LagrangianCycle1D cc = characteristicCycle(b.complex, b.sheaf);
    json edges, verts;
    for (const auto& [edge, mult] : cc.edgeZeroSection)
      edges[b.complex.cellName(edge)] = mult;
    for (const auto& [v, d] : cc.vertex)
      verts[std::to_string(v)] = {{"zero_section", d.zeroSection},
                                  {"m_plus", d.mPlus},
                                  {"m_minus", d.mMinus}};
    out["edge_zero_section"] = std::move(edges);
    out["vertex"] = std::move(verts);
  } else if (cmd == "index") {
    const PLFunction& fn = requireFunction(b);
    IndexBreakdown ix = microlocalIndex(b.complex, b.sheaf, fn);
    json per;
    for (const auto& [v, chi] : ix.perVertex) per[std::to_string(v)] = chi;
    out["per_vertex"] = std::move(per);
    out["total"] = ix.total;
    out["euler"] = globalEuler(b.complex, b.sheaf, fullCellSet(b.complex));
  } else {
    throw Error("unknown command: " + cmd);
  }
  return out;
}

void printHuman(const json& report) {
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "command") continue;
    std::cout << it.key() << ": ";
    if (it->is_string())
      std::cout << it->get<std::string>();
    else
      std::cout << it->dump();
    std::cout << "\n";
  }
}

int emit(const json& report, bool jsonOut) {
  if (jsonOut)
    std::cout << report.dump(2) << "\n";
  else
    printHuman(report);
  return 0;
}

Bundle generateBundle(const std::string& kind, int n, int maxRank,
                      std::uint64_t seed) {
  Rng rng(seed);
  if (kind == "circle-sheaf") {
    if (n < 3) throw Error("circle-sheaf needs at least 3 vertices");
    CellComplex x = circleComplex(n);
    MarkedVertexSet y = randomMarkedSet(n, rng);
    OrientationField nu = randomOrientation(x, y, rng);
    CellularSheaf f = randomCircleSheaf(x, rationalField(), nu, y, maxRank,
                                        rng);
    return Bundle{rationalField(), x, f, std::nullopt, nu, y};
  }
  if (kind == "surface-sheaf") {
    CellComplex x;
    switch (rng.below(3)) {
      case 0: x = tetrahedronBoundary(); break;
      case 1: x = octahedronBoundary(); break;
      default: x = torusComplex7(); break;
    }
    CellularSheaf f = randomSheaf(x, rationalField(), maxRank, rng, 1);
    return Bundle{rationalField(), x, f, std::nullopt, std::nullopt,
                  std::nullopt};
  }
  if (kind == "pl-function") {
    if (n < 3) throw Error("pl-function needs at least 3 vertices");
    CellComplex x = circleComplex(n);
    CellularSheaf f = constantSheaf(x, rationalField());
    return Bundle{rationalField(), x, f, randomPLFunction(n, rng),
                  std::nullopt, std::nullopt};
  }
  if (kind == "orientation") {
    if (n < 3) throw Error("orientation needs at least 3 vertices");
    CellComplex x = circleComplex(n);
    MarkedVertexSet y = randomMarkedSet(n, rng);
    OrientationField nu = randomOrientation(x, y, rng);
    return Bundle{rationalField(), x, constantSheaf(x, rationalField()),
                  std::nullopt, nu, y};
  }
  if (kind == "marked-set") {
    if (n < 3) throw Error("marked-set needs at least 3 vertices");
    CellComplex x = circleComplex(n);
    MarkedVertexSet y = randomMarkedSet(n, rng);
    OrientationField nu = uniformOrientation(x);
    return Bundle{rationalField(), x, constantSheaf(x, rationalField()),
                  std::nullopt, nu, y};
  }
  throw Error("unknown generator kind: " + kind +
              " (expected circle-sheaf, surface-sheaf, pl-function, "
              "orientation, or marked-set)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for cellular sheaves: cohomology, torsion, "
               "Morse data, and epsilon-factorizations on closed "
               "1-manifolds"};
  app.require_subcommand(1);

  Options opt;
  opt.seed = defaultSeed();
  app.add_flag("--json", opt.jsonOut, "emit the machine-readable report");

  const std::vector<std::string> dataCommands = {
      "check", "cohomology", "euler", "det", "morse", "epsilon", "cc",
      "index"};
  std::map<std::string, CLI::App*> subs;
  for (const std::string& name : dataCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();  // lets --json appear after the subcommand
    sub->add_option("bundle", opt.bundlePath, "bundle JSON file")->required();
    if (name == "epsilon")
      sub->add_option("--points", opt.points,
                      "marked vertices: comma list or \"all\"");
    subs[name] = sub;
  }

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suiteName;
  verify->add_option("suite", suiteName, "one of: additivity, morse-index, "
                                         "epsilon, lens, signs")
      ->required();
  verify->add_option("--trials", opt.trials, "trial count");
  verify->add_option("--seed", opt.seed, "RNG seed");
  verify->add_option("--jobs", opt.jobs, "parallel workers");

  CLI::App* gen = app.add_subcommand("generate", "emit a random bundle");
  std::string kind, outPath;
  int genN = 5, genRank = 2;
  gen->add_option("kind", kind, "circle-sheaf, surface-sheaf, pl-function, "
                                "orientation, or marked-set")
      ->required();
  gen->add_option("-n,--size", genN, "vertex count where applicable");
  gen->add_option("--max-rank", genRank, "max stalk rank");
  gen->add_option("--seed", opt.seed, "RNG seed");
  gen->add_option("-o,--output", outPath, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const std::string& name : dataCommands) {
      if (subs[name]->parsed()) {
        Bundle b = parseBundle(opt.bundlePath);
        return emit(runDataCommand(name, b, opt), opt.jsonOut);
      }
    }
    if (verify->parsed()) {
      SuiteResult res = runSuite(suiteName, opt.trials, opt.seed, opt.jobs);
      json report;
      report["command"] = "verify";
      report["suite"] = res.suite;
      report["seed"] = res.seed;
      report["trials"] = res.trials;
      report["failures"] = res.failures;
      report["messages"] = res.messages;
      if (opt.jsonOut) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << "suite " << res.suite << ": " << res.trials
                  << " trials, " << res.failures << " failures (seed "
                  << res.seed << ")\n";
        for (const std::string& m : res.messages) std::cout << m << "\n";
      }
      return res.ok() ? 0 : 1;
    }
    if (gen->parsed()) {
      Bundle b = generateBundle(kind, genN, genRank, opt.seed);
      std::string text = bundleToJson(b);
      if (outPath.empty()) {
        std::cout << text;
      } else {
        writeBundle(b, outPath);
        std::cerr << "wrote " << outPath << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
