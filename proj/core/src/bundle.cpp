#include "epsc/bundle.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace epsc {

namespace {

using nlohmann::json;

std::string rationalStr(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1)
    os << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

Rational parseRational(const std::string& s, const std::string& where) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(where + ": malformed rational \"" + s + "\"");
  }
}

json matrixToJson(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrixFromJson(FieldSpec f, const json& j, int rows, int cols,
                      const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw Error(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error(where + ": expected " + std::to_string(cols) +
                  " columns in row " + std::to_string(i));
    for (int jj = 0; jj < cols; ++jj) {
      if (!row[jj].is_string())
        throw Error(where + ": entries must be scalar strings");
      m.at(i, jj) = Scalar::parse(f, row[jj].get<std::string>());
    }
  }
  return m;
}

json stalkToJson(const BoundedComplex& c) {
  json out;
  out["lo"] = c.isZero() ? 0 : c.lo();
  json ranks = json::array();
  for (int n = c.lo(); n <= c.hi(); ++n) ranks.push_back(c.rank(n));
  out["ranks"] = std::move(ranks);
  json diffs;
  for (int n = c.lo(); n < c.hi(); ++n)
    if (!c.differential(n).isZero())
      diffs[std::to_string(n)] = matrixToJson(c.differential(n));
  if (!diffs.is_null()) out["d"] = std::move(diffs);
  return out;
}

BoundedComplex stalkFromJson(FieldSpec f, const json& j,
                             const std::string& where) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("ranks"))
    throw Error(where + ": stalk needs \"lo\" and \"ranks\"");
  int lo = j["lo"].get<int>();
  std::vector<int> ranks;
  for (const json& r : j["ranks"]) ranks.push_back(r.get<int>());
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k)
    diffs.emplace_back(f, ranks[k + 1], ranks[k]);
  if (j.contains("d")) {
    for (const auto& [key, val] : j["d"].items()) {
      int n = 0;
      try {
        n = std::stoi(key);
      } catch (const std::exception&) {
        throw Error(where + ": differential degree \"" + key +
                    "\" is not an integer");
      }
      if (n < lo || n - lo >= static_cast<int>(diffs.size()))
        throw Error(where + ": differential degree " + key + " out of range");
      diffs[n - lo] = matrixFromJson(f, val, ranks[n - lo + 1], ranks[n - lo],
                                     where + ".d." + key);
    }
  }
  return BoundedComplex(f, lo, std::move(ranks), std::move(diffs));
}

}  // namespace

std::string bundleToJson(const Bundle& b) {
  json out;
  out["format_version"] = kBundleFormatVersion;
  out["field"] = b.field.p == 0 ? std::string("Q")
                                : "Fp:" + std::to_string(b.field.p);
  json cells = json::array();
  for (int i = 0; i < b.complex.numCells(); ++i)
    cells.push_back(b.complex.cell(i));
  out["complex"] = {{"vertices", b.complex.numVertices()},
                    {"cells", std::move(cells)}};
  json stalks = json::array();
  for (int i = 0; i < b.complex.numCells(); ++i)
    stalks.push_back(stalkToJson(b.sheaf.stalk(i)));
  json maps = json::array();
  for (const auto& [key, byDegree] : b.sheaf.maps()) {
    json entry;
    entry["from"] = b.complex.cell(key.first);
    entry["to"] = b.complex.cell(key.second);
    json degrees;
    for (const auto& [n, m] : byDegree)
      degrees[std::to_string(n)] = matrixToJson(m);
    entry["degrees"] = std::move(degrees);
    maps.push_back(std::move(entry));
  }
  out["sheaf"] = {{"stalks", std::move(stalks)}, {"maps", std::move(maps)}};
  if (b.function) {
    json vals = json::array();
    for (const Rational& v : b.function->values())
      vals.push_back(rationalStr(v));
    out["function"] = std::move(vals);
  }
  if (b.orientation) {
    json edges = json::array();
    for (const auto& [edge, terminal] : b.orientation->terminal)
      edges.push_back({{"edge", b.complex.cell(edge)}, {"terminal", terminal}});
    out["orientation"] = std::move(edges);
  }
  if (b.marked) {
    json verts = json::array();
    for (int v : *b.marked) verts.push_back(v);
    out["marked"] = std::move(verts);
  }
  return out.dump(2) + "\n";
}

Bundle parseBundleText(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("bundle is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("bundle must be a JSON object");
  if (!doc.contains("format_version") ||
      doc["format_version"].get<int>() != kBundleFormatVersion)
    throw Error("bundle format_version must be " +
                std::to_string(kBundleFormatVersion));
  Bundle b;
  // field
  if (!doc.contains("field") || !doc["field"].is_string())
    throw Error("field: expected \"Q\" or \"Fp:<p>\"");
  std::string fs = doc["field"].get<std::string>();
  if (fs == "Q") {
    b.field = rationalField();
  } else if (fs.rfind("Fp:", 0) == 0) {
    try {
      b.field = primeField(static_cast<std::uint32_t>(std::stoul(fs.substr(3))));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("field: malformed prime in \"" + fs + "\"");
    }
  } else {
    throw Error("field: expected \"Q\" or \"Fp:<p>\", got \"" + fs + "\"");
  }
  // complex
  if (!doc.contains("complex") || !doc["complex"].is_object())
    throw Error("complex: missing object");
  const json& cx = doc["complex"];
  if (!cx.contains("vertices") || !cx.contains("cells"))
    throw Error("complex: needs \"vertices\" and \"cells\"");
  std::vector<Cell> cells;
  for (const json& c : cx["cells"]) {
    Cell cell;
    for (const json& v : c) cell.push_back(v.get<int>());
    cells.push_back(std::move(cell));
  }
  b.complex = CellComplex::build(cx["vertices"].get<int>(), cells);
  // sheaf
  if (!doc.contains("sheaf") || !doc["sheaf"].is_object())
    throw Error("sheaf: missing object");
  const json& sh = doc["sheaf"];
  if (!sh.contains("stalks") || !sh["stalks"].is_array() ||
      static_cast<int>(sh["stalks"].size()) != b.complex.numCells())
    throw Error("sheaf.stalks: expected one stalk per cell (" +
                std::to_string(b.complex.numCells()) + ")");
  std::vector<BoundedComplex> stalks;
  for (int i = 0; i < b.complex.numCells(); ++i)
    stalks.push_back(stalkFromJson(
        b.field, sh["stalks"][i],
        "sheaf.stalks[" + std::to_string(i) + "] (cell " +
            b.complex.cellName(i) + ")"));
  std::map<std::pair<int, int>, std::map<int, Matrix>> maps;
  if (sh.contains("maps")) {
    for (const json& entry : sh["maps"]) {
      if (!entry.contains("from") || !entry.contains("to"))
        throw Error("sheaf.maps: entries need \"from\" and \"to\" cells");
      Cell from, to;
      for (const json& v : entry["from"]) from.push_back(v.get<int>());
      for (const json& v : entry["to"]) to.push_back(v.get<int>());
      int sigma = b.complex.indexOf(from);
      int tau = b.complex.indexOf(to);
      if (sigma < 0 || tau < 0)
        throw Error("sheaf.maps: unknown cell in a map entry");
      bool incident = false;
      for (int fct : b.complex.facets(tau)) incident |= (fct == sigma);
      if (!incident)
        throw Error("sheaf.maps: " + b.complex.cellName(sigma) +
                    " is not a facet of " + b.complex.cellName(tau));
      std::map<int, Matrix> byDegree;
      if (entry.contains("degrees")) {
        for (const auto& [key, val] : entry["degrees"].items()) {
          int n = 0;
          try {
            n = std::stoi(key);
          } catch (const std::exception&) {
            throw Error("sheaf.maps: degree \"" + key + "\" is not an integer");
          }
          byDegree.emplace(
              n, matrixFromJson(b.field, val, stalks[tau].rank(n),
                                stalks[sigma].rank(n),
                                "sheaf.maps " + b.complex.cellName(sigma) +
                                    " -> " + b.complex.cellName(tau) +
                                    " degree " + key));
        }
      }
      maps[{sigma, tau}] = std::move(byDegree);
    }
  }
  b.sheaf = CellularSheaf(b.field, std::move(stalks), std::move(maps));
  SheafReport rep = validateSheaf(b.complex, b.sheaf);
  if (!rep.ok) {
    std::string msg = "sheaf fails validation:";
    for (const std::string& v : rep.violations) msg += "\n  " + v;
    throw Error(msg);
  }
  // optional decorations
  if (doc.contains("function")) {
    const json& fn = doc["function"];
    if (!fn.is_array() ||
        static_cast<int>(fn.size()) != b.complex.numVertices())
      throw Error("function: expected one rational per vertex");
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < fn.size(); ++i) {
      if (!fn[i].is_string())
        throw Error("function: values must be rational strings");
      vals.push_back(parseRational(fn[i].get<std::string>(),
                                   "function[" + std::to_string(i) + "]"));
    }
    b.function = PLFunction(std::move(vals));
  }
  if (doc.contains("orientation")) {
    OrientationField nu;
    for (const json& entry : doc["orientation"]) {
      if (!entry.contains("edge") || !entry.contains("terminal"))
        throw Error("orientation: entries need \"edge\" and \"terminal\"");
      Cell edge;
      for (const json& v : entry["edge"]) edge.push_back(v.get<int>());
      int idx = b.complex.indexOf(edge);
      if (idx < 0 || b.complex.dim(idx) != 1)
        throw Error("orientation: entry does not name an edge");
      nu.terminal[idx] = entry["terminal"].get<int>();
    }
    b.orientation = std::move(nu);
  }
  if (doc.contains("marked")) {
    MarkedVertexSet y;
    for (const json& v : doc["marked"]) {
      int vv = v.get<int>();
      if (vv < 0 || vv >= b.complex.numVertices())
        throw Error("marked: vertex " + std::to_string(vv) + " out of range");
      y.insert(vv);
    }
    b.marked = std::move(y);
  }
  if (b.orientation)
    validateOrientation(b.complex, *b.orientation,
                        b.marked ? *b.marked : MarkedVertexSet{});
  return b;
}

Bundle parseBundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bundle file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseBundleText(buf.str());
}

void writeBundle(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write bundle file: " + path);
  out << bundleToJson(b);
}

}  // namespace epsc
