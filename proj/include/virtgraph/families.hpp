#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "virtgraph/combmap.hpp"

namespace vg {

// All connected untwisted maps with 1..max_edges edges, one per isomorphism class.
// Sorted by edge count, then by canonical code.
std::vector<CombMap> connected_maps(int max_edges);

// sigma uniform on 2m half-edges, alpha pairs (2i, 2i+1).
CombMap random_map(std::mt19937_64& rng, int edges);

// Undirected multigraph on n vertices, loops allowed; edge list of vertex pairs.
struct Multigraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
};

struct CubicOptions {
  int max_vertices = 8;
  bool allow_loops = false;
  bool allow_multi = true;
  bool bridgeless = true;
};

// Connected cubic multigraphs, one per isomorphism class, grouped by vertex count.
std::vector<Multigraph> cubic_graphs(const CubicOptions& opt);
// Canonical adjacency string; equal iff isomorphic.
std::vector<int> graph_canonical_code(const Multigraph& g);
bool graph_has_bridge(const Multigraph& g);
bool graph_connected(const Multigraph& g);
// Map with the rotation at each vertex taken in edge-list order.
CombMap map_from_graph(const Multigraph& g);
Multigraph underlying_graph(const CombMap& m);

}  // namespace vg
