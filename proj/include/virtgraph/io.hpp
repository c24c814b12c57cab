#pragma once

#include <string>

#include "virtgraph/combmap.hpp"
#include "virtgraph/spatial.hpp"

namespace vg {

// .vgf parse failures; the message names the line/column or the offending field.
struct VgfError : MapError {
  using MapError::MapError;
};

// JSON object with `vertices` (counterclockwise half-edge lists, [] for an isolated vertex),
// `edges` (half-edge pairs), optional `vertex_signs` ({"index": +-1}), `edge_twists` (edge
// indices into `edges`) and `crossings` ([{"vertex": i, "over": [h, k]}]).
SpatialDiagram parse_vgf(const std::string& text);
SpatialDiagram read_vgf_file(const std::string& path);

// Canonical text: vertices listed from their minimal half-edge and sorted, isolated vertices
// last, edges sorted; vertex indices in `vertex_signs` and `crossings` refer to that order.
std::string serialize_vgf(const SpatialDiagram& d);
std::string serialize_vgf(const CombMap& m);

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string input_hash(const SpatialDiagram& d);

}  // namespace vg
