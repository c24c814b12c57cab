#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vg {

struct MapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-edge combinatorial map. Half-edges are 0..2m-1. sigma is the
// counterclockwise successor at a vertex, alpha the edge involution.
// Vertices with no half-edges are kept in a separate roster (iso).
struct CombMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<char> twist;          // per half-edge, same on both halves; empty = untwisted
  std::vector<signed char> sign;    // per half-edge, constant on vertices; empty = parity default
  std::vector<signed char> iso;     // isolated vertices, entry is the vertex sign

  int halfedges() const { return static_cast<int>(sigma.size()); }
  int edge_count() const { return halfedges() / 2; }
  int isolated() const { return static_cast<int>(iso.size()); }
  bool twisted(int h) const { return !twist.empty() && twist[h]; }
  bool any_twist() const;
  bool has_signs() const { return !sign.empty(); }
};

struct EulerData {
  int v = 0, e = 0, b0 = 0, b1 = 0, faces = 0;
  int euler_genus = 0;  // 2g for orientable maps
  int genus = 0;
};

struct EdgeClass {
  bool loop = false, bridge = false, coloop = false;
};

// Construction from vertex rotations and edge pairs.
CombMap make_map(const std::vector<std::vector<int>>& rotations, const std::vector<std::array<int, 2>>& edges,
                 int isolated = 0);

std::vector<std::string> validate(const CombMap& m);
void require_valid(const CombMap& m);

// Vertices are sigma-orbits ordered by minimal half-edge (each listed from its minimum),
// followed by isolated vertices.
std::vector<std::vector<int>> vertex_orbits(const CombMap& m);
int vertex_count(const CombMap& m);
std::vector<int> vertex_of_halfedge(const CombMap& m);
// Edges ordered by minimal half-edge, each pair sorted.
std::vector<std::array<int, 2>> edge_list(const CombMap& m);
int edge_index(const CombMap& m, int h);
int vertex_sign(const CombMap& m, int v);
std::vector<int> vertex_degrees(const CombMap& m);

int face_count(const CombMap& m);
int component_count(const CombMap& m);
EulerData euler_data(const CombMap& m);

CombMap partial_dual(const CombMap& m, int e);
CombMap contract(const CombMap& m, int e);
CombMap delete_edge(const CombMap& m, int e);
CombMap delete_edges(const CombMap& m, const std::vector<int>& edges);
CombMap delete_isolated_vertex(const CombMap& m, int v);
CombMap geometric_dual(const CombMap& m);
// sigma_v: reverse the rotation at v
CombMap vertex_flip(const CombMap& m, int v);
CombMap vertex_flip_set(const CombMap& m, const std::vector<int>& vs);
// flip-over at v: reverse the rotation and toggle the twist of every incident half-edge
CombMap vertex_turn_over(const CombMap& m, int v);
CombMap edge_twist(const CombMap& m, int e);
CombMap set_vertex_sign(const CombMap& m, int v, int s);
CombMap with_parity_signs(const CombMap& m);
CombMap without_signs(const CombMap& m);

EdgeClass classify_edge(const CombMap& m, int e);
bool interlaced(const CombMap& m, int e, int f);
std::vector<int> coloops(const CombMap& m);
bool has_bridge(const CombMap& m);

CombMap disjoint_union(const CombMap& a, const CombMap& b);
// Splice edge ea of a (oriented from its smaller half-edge) with edge eb of b.
CombMap edge_connect_sum(const CombMap& a, int ea, const CombMap& b, int eb, bool reverse_b = false);
// Remove degree-3 vertices va (containing half-edge ha) and vb (containing hb) and join
// the dangling edges: the half-edge ha faces hb, then the rotations run oppositely.
CombMap vertex_connect_sum(const CombMap& a, int ha, const CombMap& b, int hb);
// One-point union at the vertices containing ha and hb (inserts b's rotation after ha).
CombMap wedge(const CombMap& a, int ha, const CombMap& b, int hb);
CombMap subdivide(const CombMap& m, int e);
// Remove a degree-2 vertex (not carrying a loop) joining its two edges.
CombMap unsubdivide(const CombMap& m, int v);
CombMap relabel(const CombMap& m, const std::vector<int>& perm);

// Canonical code: identical for isomorphic maps (orientation-preserving, decorations included).
std::vector<int> canonical_code(const CombMap& m);
std::string canonical_key(const CombMap& m);
bool isomorphic(const CombMap& a, const CombMap& b);

// Calls f(W, sigma_W m) for every subset W of the vertices of degree >= 3.
void enumerate_rotation_variants(const CombMap& m,
                                 const std::function<void(const std::vector<int>&, const CombMap&)>& f);

// Small fixtures used across tests and the CLI.
namespace fixtures {
CombMap theta_p();
CombMap theta_t();
CombMap loop1();
CombMap bouquet2_int();
CombMap bridge();
CombMap k33_std();
CombMap k4();
CombMap cycle(int n);
CombMap point();
}  // namespace fixtures

}  // namespace vg
