#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "virtgraph/algebra.hpp"
#include "virtgraph/classical.hpp"
#include "virtgraph/combmap.hpp"

namespace vg {

// A classical crossing is a 4-valent vertex of the base map; `over` holds two opposite
// half-edges of it (the over-strand).
struct Crossing {
  std::array<int, 2> over{};
  auto operator<=>(const Crossing&) const = default;
};

struct SpatialDiagram {
  CombMap base;
  std::vector<Crossing> crossings;
};

std::vector<std::string> validate(const SpatialDiagram& d);
void require_valid(const SpatialDiagram& d);
// vertex index (in vertex_orbits order) of each crossing
std::vector<int> crossing_vertices(const SpatialDiagram& d);
SpatialDiagram crossingless(const CombMap& m);

// Underlying ribbon graph G': each crossing becomes two degree-2 vertices on its strands.
CombMap underlying_map(const SpatialDiagram& d);
// Spatial-graph edge count: base edges minus two per crossing.
int spatial_edge_count(const SpatialDiagram& d);

enum class Variant { S, F };

struct ExpansionTerm {
  HalfLaurent coeff{Var::q};
  CombMap map;
};
// 3^c terms: the q-smoothing joins each over half-edge with its counterclockwise successor,
// the q^{-1}-smoothing with its predecessor, and the flat vertex carries -1. `mirror` swaps
// the two smoothings.
std::vector<ExpansionTerm> expand_crossings(const SpatialDiagram& d, bool mirror = false);

HalfLaurent yamada(const SpatialDiagram& d, Variant v, bool mirror = false);

// ---------------------------------------------------------------- moves

enum class MoveKind { R1, R2, R3, IV, CrossingChange, Virtualization, Forbidden, VirtualRelabel };
const char* move_name(MoveKind k);

// Half-edge addressed site. R1: {h} curl on the edge of h. R2: {p, r} strands along the edges
// of p and r, oriented away from p and r; params {over: 1 if the r-strand is over}. R3: {p, r, t},
// params = heights (a permutation of 0..2) and side (0/1). IV: {h at the vertex, r}, params
// {over, split, side}. CrossingChange / Virtualization: {a half-edge of the crossing}.
// Forbidden: {h}, h leaves crossing X1 along a strand that next enters another crossing.
// VirtualRelabel: params = a permutation of the half-edges.
struct MoveSite {
  std::vector<int> halfedges;
  std::vector<int> params;
};

struct MoveError : MapError {
  using MapError::MapError;
};

SpatialDiagram apply_move(const SpatialDiagram& d, MoveKind k, const MoveSite& site);
// A random valid site for the move, or nothing when the diagram has none.
std::optional<MoveSite> random_site(const SpatialDiagram& d, MoveKind k, std::mt19937& rng);

// ---------------------------------------------------------------- obstruction

struct ObstructionClass {
  int modulus = 2;               // 2, or 0 for the integral class
  int edges = 0;                 // edges of G' (strand chains through crossings)
  std::vector<long> rep;         // coefficients over pairs e < f, reduced modulo coboundaries
  bool is_zero() const;
  bool operator==(const ObstructionClass&) const = default;
  std::string str() const;
};
// Chains are numbered by first appearance in halfedge_order (default 0, 1, ..., n-1).
ObstructionClass obstruction_z2(const SpatialDiagram& d, const std::vector<int>& halfedge_order = {});
// Integral class: chains are oriented away from their first real-vertex end, a crossing
// counts +1 when the outgoing under half-edge follows the outgoing over half-edge
// counterclockwise, and cosets are compared through Hermite normal form.
ObstructionClass obstruction_z(const SpatialDiagram& d, const std::vector<int>& halfedge_order = {});
int crossing_sign(const SpatialDiagram& d, int crossing);

struct NonclassicalityReport {
  HalfLaurent rs{Var::q}, rf{Var::q};
  bool distinct = false;
  bool cubic = false;
  bool not_pliable = false;  // distinct and cubic
  std::string verdict;  // "nonclassical" or "inconclusive"
};
NonclassicalityReport nonclassicality_report(const SpatialDiagram& d);

CheckReport special_evaluation_checks(const SpatialDiagram& d);

struct GoldenResult {
  Cyclotomic lhs, rhs;
  bool holds = false;
};
// R(e^{i pi/5}) against phi^{|E|} R(e^{-2 i pi/5})^2 in Q(zeta_10), any diagram.
GoldenResult golden_identity(const SpatialDiagram& d, Variant v);
// Requires a classical (planar base) cubic diagram; throws MapError otherwise.
bool golden_identity_check(const SpatialDiagram& d);

// Forbidden-move invariance points: R^S at q = +-1, e^{+-2 pi i/3}; R^F also at q = +-i.
CheckReport forbidden_move_checks(const SpatialDiagram& before, const SpatialDiagram& after);

// Diagram of a graph drawn with straight edges between the given points; where two edges
// cross, the one with the larger height is over. Empty heights means the edge index.
SpatialDiagram straight_line_diagram(const std::vector<std::array<double, 2>>& points,
                                     const std::vector<std::array<int, 2>>& edges,
                                     const std::vector<double>& heights = {});

namespace fixtures {
SpatialDiagram theta_t_as_spatial();
// K_{3,3} on a hexagon with its three long diagonals (three crossings).
SpatialDiagram k33_drawn();
// Standard trefoil diagram (three crossings).
SpatialDiagram trefoil();
// Theta graph with one edge tied in a trefoil.
SpatialDiagram knotted_theta();
// Planar K4 with two edges pushed across each other by an R2 pair.
SpatialDiagram k4_r2();
// Classical cubic diagrams: planar embeddings of the bridgeless cubic graphs with at most
// max_vertices vertices, each also with random R2 / R3 / IV insertions that keep the base
// planar, up to max_crossings crossings. Deterministic for a seed.
std::vector<SpatialDiagram> classical_cubic_samples(int max_vertices, int max_crossings, unsigned seed,
                                                    int per_graph);
}  // namespace fixtures

}  // namespace vg
