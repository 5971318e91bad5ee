#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypint/cone.hpp"
#include "hypint/criterion.hpp"
#include "hypint/lattice.hpp"
#include "hypint/series.hpp"

namespace hypint {

/// Contents of a JSON input document. A document holds either a lattice
/// configuration ("points", 1-based "aprime", optional "height") or a ratio
/// family ("C", "D"), whose configuration is then built from it. Both kinds
/// may list parameters u under "parameters".
struct Document {
  std::optional<LatticeConfig> config;
  std::optional<RatioFamily> family;
  std::vector<Vec> parameters;
};

/// Throws InputError naming the offending field.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Comma-separated integers, e.g. "-1,-1,-1,-1,-2".
Vec parse_vector(const std::string& text);

/// One line per term, `l=... e=... c=num/den`, after a header naming N, M,
/// u, the frontier and the original column order.
std::string series_to_text(const SparseSeries& s, const LatticeConfig& cfg);
SparseSeries series_from_text(const std::string& text);

/// Canonical compact JSON with sorted keys; integers beyond 64 bits become strings.
std::string cone_to_json(const Cone& cone);
std::string za_to_json(const ZAGroup& za);

}  // namespace hypint
