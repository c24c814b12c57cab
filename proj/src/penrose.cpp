#include "virtgraph/penrose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "virtgraph/parallel.hpp"

namespace vg {

namespace {

enum class Strand : char { Id, X, E };
enum class Rot : char { Cyc, Rev };

struct EdgeOption {
  Strand kind;
  int weight;  // +-1
  int npow;    // power of N carried by the option
};

struct VertexOption {
  Rot kind;
  int weight;
};

// Sum over the product of per-vertex and per-edge options on doubled strands. Strand ends
// are L(h) = 2h and R(h) = 2h + 1. Returns exponent of N -> coefficient.
std::map<long, long long> doubled_strand_sum(const CombMap& m, const std::vector<std::vector<VertexOption>>& vopt,
                                             const std::vector<std::vector<EdgeOption>>& eopt, int vertex_npow) {
  int n = m.halfedges();
  auto orbits = vertex_orbits(m);
  auto el = edge_list(m);
  int V = static_cast<int>(orbits.size());
  int E = static_cast<int>(el.size());
  // choice slots: vertices first, then edges; each has 1 or 2 options
  std::vector<int> slots;
  for (int v = 0; v < V; ++v)
    if (vopt[v].size() == 2) slots.push_back(v);
  for (int k = 0; k < E; ++k)
    if (eopt[k].size() == 2) slots.push_back(V + k);
  int bits = static_cast<int>(slots.size());
  if (bits > 40) throw MapError("doubled strand sum too large");
  std::vector<int> slot_bit(V + E, -1);
  for (int i = 0; i < bits; ++i) slot_bit[slots[i]] = i;
  long total = 1L << bits;
  int chunks = bits >= 14 ? 64 : 1;
  std::function<std::map<long, long long>(long, long)> body = [&](long b, long e) {
    std::map<long, long long> acc;
    std::vector<int> parent(2 * n);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (long s = b; s < e; ++s) {
      std::iota(parent.begin(), parent.end(), 0);
      int comps = 2 * n;
      auto unite = [&](int x, int y) {
        x = find(x), y = find(y);
        if (x != y) {
          parent[x] = y;
          --comps;
        }
      };
      long long w = 1;
      long npow = 0;
      for (int v = 0; v < V; ++v) {
        int pick = slot_bit[v] >= 0 ? (s >> slot_bit[v] & 1) : 0;
        const auto& o = vopt[v][pick];
        w *= o.weight;
        npow += vertex_npow;
        for (int h : orbits[v]) {
          if (o.kind == Rot::Cyc)
            unite(2 * h, 2 * m.sigma[h] + 1);
          else
            unite(2 * h + 1, 2 * m.sigma[h]);
        }
      }
      for (int k = 0; k < E; ++k) {
        int pick = slot_bit[V + k] >= 0 ? (s >> slot_bit[V + k] & 1) : 0;
        const auto& o = eopt[k][pick];
        w *= o.weight;
        npow += o.npow;
        int a = el[k][0], c = el[k][1];
        switch (o.kind) {
          case Strand::Id:
            unite(2 * a, 2 * c + 1);
            unite(2 * a + 1, 2 * c);
            break;
          case Strand::X:
            unite(2 * a, 2 * c);
            unite(2 * a + 1, 2 * c + 1);
            break;
          case Strand::E:
            unite(2 * a, 2 * a + 1);
            unite(2 * c, 2 * c + 1);
            break;
        }
      }
      if (w) acc[npow + comps] += w;
    }
    return acc;
  };
  std::map<long, long long> out;
  for (auto& part : parallel_chunks<std::map<long, long long>>(total, chunks, body))
    for (auto& [k, v] : part) out[k] += v;
  return out;
}

HalfLaurent to_poly_N(const std::map<long, long long>& acc) {
  HalfLaurent r(Var::N);
  for (auto& [k, v] : acc)
    if (v) r.add_term(2 * k, Rational(static_cast<long>(v)));
  return r;
}

HalfLaurent N_pow(long k, const Rational& c = 1) { return HalfLaurent::power_of(Var::N, k, c); }

int first_trivalent_halfedge(const CombMap& m) {
  for (auto& o : vertex_orbits(m)) {
    if (o.size() != 3) continue;
    bool loop = false;
    for (int h : o)
      for (int g : o)
        if (m.alpha[h] == g) loop = true;
    if (!loop) return o[0];
  }
  return -1;
}

CombMap signed_copy(const CombMap& m) { return m.has_signs() ? m : with_parity_signs(m); }

}  // namespace

HalfLaurent w_so(const CombMap& m) {
  require_valid(m);
  auto orbits = vertex_orbits(m);
  auto el = edge_list(m);
  std::vector<std::vector<VertexOption>> vopt(orbits.size(), {{Rot::Cyc, 1}});
  std::vector<std::vector<EdgeOption>> eopt;
  for (auto& [a, b] : el) {
    if (m.twisted(a))
      eopt.push_back({{Strand::X, 1, 0}, {Strand::Id, -1, 0}});
    else
      eopt.push_back({{Strand::Id, 1, 0}, {Strand::X, -1, 0}});
  }
  HalfLaurent r = to_poly_N(doubled_strand_sum(m, vopt, eopt, 0));
  return r * N_pow(m.isolated());
}

HalfLaurent w_sl_brauer(const SignedMap& m) {
  require_valid(m);
  auto orbits = vertex_orbits(m);
  auto el = edge_list(m);
  std::vector<std::vector<VertexOption>> vopt;
  for (size_t v = 0; v < orbits.size(); ++v)
    vopt.push_back({{Rot::Cyc, 1}, {Rot::Rev, vertex_sign(m, static_cast<int>(v))}});
  std::vector<std::vector<EdgeOption>> eopt;
  for (auto& [a, b] : el)
    eopt.push_back({{m.twisted(a) ? Strand::X : Strand::Id, 1, 1}, {Strand::E, -1, 0}});
  HalfLaurent r = to_poly_N(doubled_strand_sum(m, vopt, eopt, -1));
  Rational iso = 1;
  for (int i = 0; i < m.isolated(); ++i) iso *= 1 + m.iso[i];
  return r * iso;
}

HalfLaurent w_sl_extended(const SignedMap& m) {
  require_valid(m);
  if (m.any_twist()) throw MapError("w_sl_extended needs an untwisted map; use w_sl_brauer");
  auto orbits = vertex_orbits(m);
  int V = static_cast<int>(orbits.size());
  // flipping a vertex of degree <= 2 leaves the map unchanged: those contribute (1 + s)
  Rational factor = 1;
  std::vector<int> big;
  for (int v = 0; v < V; ++v) {
    if (orbits[v].size() <= 2)
      factor *= 1 + vertex_sign(m, v);
    else
      big.push_back(v);
  }
  for (int i = 0; i < m.isolated(); ++i) factor *= 1 + vertex_sign(m, V + i);
  if (factor == 0) return HalfLaurent(Var::N);
  std::vector<int> sgn;
  for (int v : big) sgn.push_back(vertex_sign(m, v));
  int k = static_cast<int>(big.size());
  long total = 1L << k;
  int chunks = k >= 10 ? 64 : 1;
  std::function<HalfLaurent(long, long)> body = [&](long b, long e) {
    HalfLaurent acc(Var::Q);
    for (long s = b; s < e; ++s) {
      std::vector<int> flips;
      int w = 1;
      for (int i = 0; i < k; ++i)
        if (s >> i & 1) {
          flips.push_back(big[i]);
          w *= sgn[i];
        }
      acc += Rational(w) * s_poly(vertex_flip_set(m, flips));
    }
    return acc;
  };
  HalfLaurent sum(Var::Q);
  for (auto& p : parallel_chunks<HalfLaurent>(total, chunks, body)) sum += p;
  return sum.rescaled(Var::N, 2) * factor;
}

HalfLaurent w_so_via_sl(const SignedMap& m) {
  int E = m.edge_count();
  if (E > 20) throw MapError("w_so_via_sl: too many edges");
  CombMap base = signed_copy(m);
  HalfLaurent r(Var::N);
  for (long s = 0; s < (1L << E); ++s) {
    CombMap t = base;
    int bits = 0;
    for (int k = 0; k < E; ++k)
      if (s >> k & 1) {
        t = edge_twist(t, k);
        ++bits;
      }
    HalfLaurent w = w_sl_brauer(t);
    if (bits % 2)
      r -= w;
    else
      r += w;
  }
  return r;
}

CheckReport so_as_sl_check(const SignedMap& m) {
  CheckReport r;
  CombMap s = signed_copy(m);
  auto deg = vertex_degrees(s);
  int V = vertex_count(s);
  Rational f = 1;
  for (int v = 0; v < V; ++v) f *= 1 + vertex_sign(s, v) * (deg[v] % 2 ? -1 : 1);
  HalfLaurent rhs = N_pow(s.edge_count() - V, f) * w_so(s);
  r.add("sum_S (-1)^|S| W_sl(tau_S G) = N^(E-V) prod(1 + s(v)(-1)^deg) W_so", w_so_via_sl(s), rhs);
  return r;
}

// ------------------------------------------------------------ relation suites

CheckReport w_so_relation_suite(const CombMap& m, int e) {
  CheckReport r;
  HalfLaurent w = w_so(m);
  r.add("W_so(G) = W_so(G/e) - W_so(tau_e G/e)", w, w_so(contract(m, e)) - w_so(contract(edge_twist(m, e), e)));
  HalfLaurent lhs_cor = w - w_so(contract(m, e));
  CombMap d = m.any_twist() ? m : partial_dual(m, e);
  if (!m.any_twist())
    r.add("W_so(G) - W_so(G/e) = W_so(d_e G) - W_so(d_e G/e)", lhs_cor, w_so(d) - w_so(contract(d, e)));
  auto deg = vertex_degrees(m);
  for (int v = 0; v < vertex_count(m); ++v) {
    HalfLaurent flipped = w_so(vertex_flip(m, v));
    r.add("W_so(flip v" + std::to_string(v) + ") = (-1)^deg W_so", flipped, deg[v] % 2 ? -w : w);
  }
  r.add("W_so(subdivided) = 2 W_so", w_so(subdivide(m, e)), Rational(2) * w);
  CombMap th = fixtures::theta_p();
  HalfLaurent nn1 = product_of_linear(Var::N, {{0, 1}, {1, 1}});
  r.add("2N(N-1) W_so(#2) = W_so(union)", Rational(2) * nn1 * w_so(edge_connect_sum(m, e, th, 0)),
        w_so(disjoint_union(subdivide(m, e), subdivide(th, 0))));
  int h = first_trivalent_halfedge(m);
  if (h >= 0) {
    CombMap k4 = fixtures::k4();
    HalfLaurent p3 = product_of_linear(Var::N, {{0, 1}, {1, 1}, {2, 1}});
    r.add("N(N-1)(N-2) W_so(#3) = W_so(union)", p3 * w_so(vertex_connect_sum(m, h, k4, 0)),
          w_so(disjoint_union(m, k4)));
  }
  return r;
}

namespace {

// Contract the loop e at a signed map and give the two resulting pieces signs s1, s2.
CombMap contract_loop_signed(const CombMap& m, int e, int s1, int s2) {
  auto el = edge_list(m);
  auto [a, b] = el[e];
  auto vof = vertex_of_halfedge(m);
  int v = vof[a];
  CombMap c = contract(m, e);
  auto newh = [&](int h) { return h - (h > a) - (h > b); };
  auto cvof = vertex_of_halfedge(c);
  std::vector<int> pieces;
  for (int h = 0; h < m.halfedges(); ++h) {
    if (h == a || h == b || vof[h] != v) continue;
    int pv = cvof[newh(h)];
    if (std::find(pieces.begin(), pieces.end(), pv) == pieces.end()) pieces.push_back(pv);
  }
  int nv = vertex_count(c) - c.isolated();
  for (int i = m.isolated(); i < c.isolated(); ++i) pieces.push_back(nv + i);
  if (pieces.size() != 2) throw MapError("loop contraction did not split the vertex in two");
  c = set_vertex_sign(c, pieces[0], s1);
  return set_vertex_sign(c, pieces[1], s2);
}

}  // namespace

CheckReport w_sl_relation_suite(const SignedMap& m0, int e) {
  CheckReport r;
  CombMap m = signed_copy(m0);
  HalfLaurent w = w_sl_extended(m);
  auto el = edge_list(m);
  auto vof = vertex_of_halfedge(m);
  auto [ha, hb] = el[e];
  int u = vof[ha], v = vof[hb];
  HalfLaurent del = w_sl_extended(delete_edge(m, e));
  if (u != v) {
    int sa = vertex_sign(m, u), sb = vertex_sign(m, v);
    CombMap merged = set_vertex_sign(set_vertex_sign(m, u, sa * sb), v, sa * sb);
    HalfLaurent rhs = w_sl_extended(contract(merged, e)) +
                      Rational(sb) * w_sl_extended(contract(vertex_flip(merged, v), e)) - del;
    r.add("edge relation W(G) = W(G/e) + b W(sigma_w G/e) - W(G-e)", w, rhs);
  } else {
    int sa = vertex_sign(m, u);
    HalfLaurent half_n2 = N_pow(2, Rational(1, 2));
    HalfLaurent rhs =
        half_n2 * (w_sl_extended(contract_loop_signed(m, e, 1, sa)) + w_sl_extended(contract_loop_signed(m, e, -1, -sa))) -
        del;
    r.add("loop relation W(G) = N^2/2 (W(+,a) + W(-,-a)) - W(G-e)", w, rhs);
  }
  for (int x = 0; x < vertex_count(m); ++x)
    r.add("W_sl(flip v" + std::to_string(x) + ") = s(v) W_sl", w_sl_extended(vertex_flip(m, x)),
          Rational(vertex_sign(m, x)) * w);
  CombMap th = with_parity_signs(fixtures::theta_p());
  HalfLaurent n21 = N_pow(2) - N_pow(0);
  // the degree-2 vertices being removed each carry 1 + s = 2 here, hence 4 rather than 2
  r.add("4(N^2-1) W_sl(#2) = W_sl(union)", Rational(4) * n21 * w_sl_extended(edge_connect_sum(m, e, th, 0)),
        w_sl_extended(disjoint_union(subdivide(m, e), subdivide(th, 0))));
  int h = first_trivalent_halfedge(m);
  if (h >= 0) {
    CombMap k4 = with_parity_signs(fixtures::k4());
    int vh = vof[h];
    HalfLaurent pp = Rational(2) * n21 * (N_pow(2) - N_pow(0, 4));
    HalfLaurent pm = Rational(2) * n21 * N_pow(2);
    auto pos = disjoint_union(set_vertex_sign(m, vh, 1), set_vertex_sign(k4, 0, 1));
    auto neg = disjoint_union(set_vertex_sign(m, vh, -1), set_vertex_sign(k4, 0, -1));
    r.add("p+ p- W_sl(#3) = p- W_sl(G1+ u G2+) + p+ W_sl(G1- u G2-)",
          pp * pm * w_sl_extended(vertex_connect_sum(m, h, k4, 0)), pm * w_sl_extended(pos) + pp * w_sl_extended(neg));
  }
  return r;
}

CheckReport ihx_check() {
  // legs l1..l4 sit counterclockwise around the local disk; closures pair them with outer
  // half-edges. I joins (1,2 | 3,4), H joins (4,1 | 2,3), X joins (1,3 | 2,4).
  // local half-edges: A = 0,1,2 and B = 3,4,5 with internal edge 2-3.
  auto local = [](int kind) {
    std::vector<std::vector<int>> rot;
    std::array<int, 4> leg{};
    if (kind == 0) {  // I: A (l1 l2 e), B (l4 e l3)
      rot = {{0, 1, 2}, {3, 4, 5}};
      leg = {0, 1, 5, 4};
    } else if (kind == 1) {  // H: A (l4 l1 e), B (e l2 l3)
      rot = {{0, 1, 2}, {3, 4, 5}};
      leg = {1, 4, 5, 0};
    } else {  // X: A (l1 l3 e), B (e l2 l4)
      rot = {{0, 1, 2}, {3, 4, 5}};
      leg = {0, 4, 1, 5};
    }
    return std::pair{rot, leg};
  };
  // each closure: extra rotations (half-edges from 6) plus leg i -> outer half-edge
  struct Closure {
    std::vector<std::vector<int>> rot;
    std::vector<std::array<int, 2>> inner;
    std::array<int, 4> outer;
  };
  std::vector<Closure> closures = {
      {{{6, 7, 8}, {9, 10, 11}}, {{8, 9}}, {6, 11, 10, 7}},  // a second I-tree, mirrored
      {{{6, 7, 8}, {9, 10, 11}}, {{8, 11}}, {6, 9, 7, 10}},  // crossed tree
      {{{6, 7, 8, 9}}, {}, {6, 7, 8, 9}},                    // one degree-4 vertex
  };
  CheckReport r;
    for (size_t c = 0; c < closures.size(); ++c) {
    HalfLaurent val[3];
    for (int kind = 0; kind < 3; ++kind) {
      auto [rot, leg] = local(kind);
      std::vector<std::array<int, 2>> edges = {{2, 3}};
      for (auto& x : closures[c].rot) rot.push_back(x);
      for (auto& x : closures[c].inner) edges.push_back(x);
      for (int i = 0; i < 4; ++i) edges.push_back({leg[i], closures[c].outer[i]});
      val[kind] = w_so(make_map(rot, edges));
    }
    r.add("closure " + std::to_string(c) + " nonzero", !val[0].is_zero(), val[0].str());
    // with these rotations the relation reads I + H + X = 0
    r.add("closure " + std::to_string(c) + ": W(I) + W(H) + W(X) = 0", val[0] + val[1] + val[2], HalfLaurent(Var::N));
  }
  return r;
}

// ------------------------------------------------------------ embeddings and planarity

HalfLaurent cellular_embedding_poly(const CombMap& m) {
  require_valid(m);
  for (int d : vertex_degrees(m))
    if (d != 3) throw MapError("cellular embedding polynomial needs a cubic map");
  int V = vertex_count(m);
  if (V > 30) throw MapError("cellular embedding polynomial: too many vertices");
  long total = 1L << V;
  int chunks = V >= 12 ? 64 : 1;
  std::function<std::map<long, long long>(long, long)> body = [&](long b, long e) {
    std::map<long, long long> acc;
    for (long s = b; s < e; ++s) {
      std::vector<int> flips;
      for (int v = 0; v < V; ++v)
        if (s >> v & 1) flips.push_back(v);
      acc[euler_data(vertex_flip_set(m, flips)).genus] += flips.size() % 2 ? -1 : 1;
    }
    return acc;
  };
  HalfLaurent r(Var::x);
  for (auto& part : parallel_chunks<std::map<long, long long>>(total, chunks, body))
    for (auto& [g, c] : part)
      if (c) r.add_term(2 * g, Rational(static_cast<long>(c)));
  return r;
}

PlanarityResult planarity_by_flips(const CombMap& m) {
  require_valid(m);
  auto orbits = vertex_orbits(m);
  int V = static_cast<int>(orbits.size());
  // components by vertex; flipping a whole component is a mirror image, so the first
  // vertex of each component stays put
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto vof = vertex_of_halfedge(m);
  for (int h = 0; h < m.halfedges(); ++h) parent[find(vof[h])] = find(vof[m.alpha[h]]);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < V; ++v) comps[find(v)].push_back(v);
  PlanarityResult res;
  std::vector<int> witness;
  for (auto& [root, vs] : comps) {
    std::vector<int> free;
    for (size_t i = 1; i < vs.size(); ++i)
      if (orbits[vs[i]].size() >= 3) free.push_back(vs[i]);
    if (free.size() > 30) throw MapError("planarity_by_flips: component too large");
    // the component on its own
    std::vector<char> keep(V, 0);
    for (int v : vs) keep[v] = 1;
    std::vector<char> gone(m.halfedges(), 0);
    std::vector<int> hs;
    for (int h = 0; h < m.halfedges(); ++h)
      if (keep[vof[h]]) hs.push_back(h);
    std::vector<int> relabel_to(m.halfedges(), -1);
    for (size_t i = 0; i < hs.size(); ++i) relabel_to[hs[i]] = static_cast<int>(i);
    CombMap c;
    for (int h : hs) {
      c.sigma.push_back(relabel_to[m.sigma[h]]);
      c.alpha.push_back(relabel_to[m.alpha[h]]);
    }
    auto cvof = vertex_of_halfedge(c);
    std::vector<int> local(free.size());
    for (size_t i = 0; i < free.size(); ++i) local[i] = cvof[relabel_to[orbits[free[i]][0]]];
    // smallest flip sets first
    std::vector<long> masks(1L << free.size());
    std::iota(masks.begin(), masks.end(), 0L);
    std::stable_sort(masks.begin(), masks.end(),
                     [](long x, long y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
    bool found = false;
    for (long s : masks) {
      std::vector<int> fl, orig;
      for (size_t i = 0; i < free.size(); ++i)
        if (s >> i & 1) {
          fl.push_back(local[i]);
          orig.push_back(free[i]);
        }
      if (euler_data(vertex_flip_set(c, fl)).genus == 0) {
        witness.insert(witness.end(), orig.begin(), orig.end());
        found = true;
        break;
      }
    }
    if (!found) return res;
  }
  std::sort(witness.begin(), witness.end());
  res.planar_somehow = true;
  res.witness = witness;
  return res;
}

CheckReport penrose_number_checks(const CombMap& m0) {
  CheckReport r;
  CombMap m = with_parity_signs(m0);
  int V = vertex_count(m), E = m.edge_count();
  HalfLaurent sl = m.any_twist() ? w_sl_brauer(m) : w_sl_extended(m);
  HalfLaurent so = w_so(m);
  Rational sl2 = sl.eval(2), slm2 = sl.eval(-2);
  Rational pow2v = 1, pow2e = 1;
  for (int i = 0; i < V; ++i) pow2v *= 2;
  for (int i = 0; i < E; ++i) pow2e *= 2;
  if (!m.any_twist()) {
    Rational s4 = s_poly(m).eval(4);
    r.add("W_sl(2) = 2^|V| S(4)", sl2, pow2v * s4);
    // so(3) = sl(2) only pins the trivalent vertex; degree 2 and 0 carry 2 and 3
    auto deg = vertex_degrees(m);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 3; })) {
      Rational norm = 1;
      for (int d : deg) norm *= d == 0 ? 3 : d == 2 ? 2 : 1;
      r.add("W_so(3) = 3^#iso 2^#deg2 S(4)", so.eval(3), norm * s4);
    }
  }
  // even in N only without twists
  if (!m.any_twist()) r.add("W_sl(2) = W_sl(-2)", sl2, slm2);
  if (E <= 10) {
    r.add("binor: sum_S (-1)^|S| W_sl(tau_S G)(-2) = 2^|E| W_sl(-2)", w_so_via_sl(m).eval(-2), pow2e * slm2);
  }
  r.add("W_sl(-2) = (-1)^(E-V) W_so(-2)", slm2, (E - V) % 2 ? -so.eval(-2) : so.eval(-2));
  for (int v = 0; v < V; ++v) {
    CombMap off = set_vertex_sign(m, v, -vertex_sign(m, v));
    HalfLaurent w = m.any_twist() ? w_sl_brauer(off) : w_sl_extended(off);
    r.add("wrong sign at v" + std::to_string(v) + " kills W_sl(2)", w.eval(2), Rational(0));
  }
  return r;
}

}  // namespace vg
