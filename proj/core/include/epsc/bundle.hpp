#ifndef EPSC_BUNDLE_HPP
#define EPSC_BUNDLE_HPP

#include <optional>
#include <string>

#include "epsc/micro.hpp"

namespace epsc {

// A self-contained problem instance: a complex, a sheaf on it, and optional
// Morse/microlocal decorations.  Serialized as a single JSON document with
// sorted keys and lexicographically sorted cells, so the canonical text form
// is byte-stable under round trips.
struct Bundle {
  FieldSpec field;
  CellComplex complex;
  CellularSheaf sheaf;
  std::optional<PLFunction> function;      // per-vertex rational values
  std::optional<OrientationField> orientation;
  std::optional<MarkedVertexSet> marked;
};

inline constexpr int kBundleFormatVersion = 1;

// Canonical JSON text (2-space indent, sorted keys, trailing newline).
std::string bundleToJson(const Bundle& b);

// Parses and validates; throws Error naming the offending field.
Bundle parseBundleText(const std::string& text);

Bundle parseBundle(const std::string& path);
void writeBundle(const Bundle& b, const std::string& path);

}  // namespace epsc

#endif
