#include "virtgraph/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <functional>
#include <set>
#include <sstream>

#include "virtgraph/families.hpp"
#include "virtgraph/parallel.hpp"
#include "virtgraph/penrose.hpp"

namespace vg {

// ---------------------------------------------------------------- basics

std::vector<std::string> validate(const SpatialDiagram& d) {
  auto out = validate(d.base);
  if (!out.empty()) return out;
  if (d.base.any_twist()) out.push_back("spatial diagrams are untwisted");
  int n = d.base.halfedges();
  auto vof = vertex_of_halfedge(d.base);
  auto deg = vertex_degrees(d.base);
  std::vector<char> used(vertex_count(d.base), 0);
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    auto [a, c] = d.crossings[i].over;
    std::string tag = "crossing " + std::to_string(i) + ": ";
    if (a < 0 || a >= n || c < 0 || c >= n) {
      out.push_back(tag + "half-edge out of range");
      continue;
    }
    int v = vof[a];
    if (deg[v] != 4) out.push_back(tag + "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));
    else if (d.base.sigma[d.base.sigma[a]] != c) out.push_back(tag + "over half-edges " + std::to_string(a) + ", " + std::to_string(c) + " are not opposite");
    if (used[v]) out.push_back(tag + "vertex " + std::to_string(v) + " carries two crossings");
    used[v] = 1;
  }
  return out;
}

void require_valid(const SpatialDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw MapError(v.front());
}

std::vector<int> crossing_vertices(const SpatialDiagram& d) {
  auto vof = vertex_of_halfedge(d.base);
  std::vector<int> r;
  for (auto& c : d.crossings) r.push_back(vof[c.over[0]]);
  return r;
}

SpatialDiagram crossingless(const CombMap& m) {
  SpatialDiagram d;
  d.base = m;
  d.base.sign.clear();
  return d;
}

CombMap underlying_map(const SpatialDiagram& d) {
  require_valid(d);
  CombMap m = d.base;
  for (auto& c : d.crossings) {
    int a = c.over[0], b = m.sigma[a], cc = m.sigma[b], dd = m.sigma[cc];
    m.sigma[a] = cc;
    m.sigma[cc] = a;
    m.sigma[b] = dd;
    m.sigma[dd] = b;
  }
  m.sign.clear();
  return m;
}

int spatial_edge_count(const SpatialDiagram& d) {
  return d.base.edge_count() - 2 * static_cast<int>(d.crossings.size());
}

// ---------------------------------------------------------------- expansion

std::vector<ExpansionTerm> expand_crossings(const SpatialDiagram& d, bool mirror) {
  require_valid(d);
  int c = static_cast<int>(d.crossings.size());
  if (c > 14) throw MapError("too many crossings to expand");
  long total = 1;
  for (int i = 0; i < c; ++i) total *= 3;
  std::vector<ExpansionTerm> out;
  out.reserve(total);
  HalfLaurent qp = HalfLaurent::power_of(Var::q, mirror ? -1 : 1);
  HalfLaurent qm = HalfLaurent::power_of(Var::q, mirror ? 1 : -1);
  HalfLaurent flat = HalfLaurent::constant(Var::q, -1);
  for (long s = 0; s < total; ++s) {
    ExpansionTerm t;
    t.coeff = HalfLaurent::constant(Var::q, 1);
    t.map = d.base;
    t.map.sign.clear();
    long x = s;
    for (int i = 0; i < c; ++i, x /= 3) {
      int a = d.crossings[i].over[0];
      int b = d.base.sigma[a], cc = d.base.sigma[b], dd = d.base.sigma[cc];
      auto& sg = t.map.sigma;
      switch (x % 3) {
        case 0:  // (a b)(c d)
          sg[a] = b, sg[b] = a, sg[cc] = dd, sg[dd] = cc;
          t.coeff *= qp;
          break;
        case 1:  // (b c)(d a)
          sg[b] = cc, sg[cc] = b, sg[dd] = a, sg[a] = dd;
          t.coeff *= qm;
          break;
        default:
          t.coeff *= flat;
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

HalfLaurent yamada(const SpatialDiagram& d, Variant v, bool mirror) {
  auto terms = expand_crossings(d, mirror);
  std::map<std::string, std::pair<HalfLaurent, const CombMap*>> grouped;
  for (auto& t : terms) {
    auto key = canonical_key(t.map);
    auto it = grouped.find(key);
    if (it == grouped.end())
      grouped.emplace(key, std::pair{t.coeff, &t.map});
    else
      it->second.first += t.coeff;
  }
  std::vector<std::pair<HalfLaurent, const CombMap*>> work;
  for (auto& [key, entry] : grouped)
    if (!entry.first.is_zero()) work.push_back(entry);
  auto body = [&](long lo, long hi) {
    HalfLaurent r(Var::q);
    for (long i = lo; i < hi; ++i) {
      auto& [c, m] = work[i];
      HalfLaurent p = v == Variant::S ? s_poly(*m) : flow_poly(*m);
      r += c * substitute_q_shift(p);
    }
    return r;
  };
  long total = static_cast<long>(work.size());
  int chunks = total >= 64 ? std::min<long>(total, 4L * worker_count()) : 1;
  HalfLaurent r(Var::q);
  for (auto& part : parallel_chunks<HalfLaurent>(total, chunks, body)) r += part;
  return r;
}

// ---------------------------------------------------------------- planar pieces

namespace {

struct Pt {
  double x = 0, y = 0;
};

// A curve runs from node `from` to node `to` through `via`; z gives heights at every
// polyline point (one entry means constant).
struct Curve {
  int from = 0, to = 0;
  std::vector<Pt> via;
  std::vector<double> z;
};

struct PieceSpec {
  std::vector<Pt> nodes;
  std::vector<char> port;
  std::vector<Curve> curves;
};

struct Piece {
  std::vector<int> sigma, alpha;       // alpha -1 at half-edges facing a port
  std::vector<int> port_half;          // half-edge attached to each port, -1 for a bare strand
  std::vector<int> port_pass;          // for a bare strand, the port at its other end
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> node_halves;
};

struct Event {
  int seg;
  double t;
  int crossing;
  int occ;
  bool operator<(const Event& o) const { return seg != o.seg ? seg < o.seg : t < o.t; }
};

Piece build_piece(const PieceSpec& spec) {
  int nc = static_cast<int>(spec.curves.size());
  std::vector<std::vector<Pt>> pts(nc);
  for (int i = 0; i < nc; ++i) {
    auto& c = spec.curves[i];
    pts[i].push_back(spec.nodes[c.from]);
    for (auto& p : c.via) pts[i].push_back(p);
    pts[i].push_back(spec.nodes[c.to]);
  }
  auto zat = [&](int i, int seg, double t) {
    auto& z = spec.curves[i].z;
    if (z.size() == 1) return z[0];
    return z[seg] + t * (z[seg + 1] - z[seg]);
  };
  std::vector<std::vector<Event>> events(nc);
  struct XRec {
    int ci, cj;
    double zi, zj;
  };
  std::vector<XRec> xs;
  const double eps = 1e-9;
  for (int i = 0; i < nc; ++i)
    for (int j = i; j < nc; ++j)
      for (size_t a = 0; a + 1 < pts[i].size(); ++a)
        for (size_t b = (i == j ? a + 2 : 0); b + 1 < pts[j].size(); ++b) {
          Pt p = pts[i][a], r{pts[i][a + 1].x - p.x, pts[i][a + 1].y - p.y};
          Pt q = pts[j][b], s{pts[j][b + 1].x - q.x, pts[j][b + 1].y - q.y};
          double den = r.x * s.y - r.y * s.x;
          if (std::fabs(den) < 1e-12) continue;
          double t = ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / den;
          double u = ((q.x - p.x) * r.y - (q.y - p.y) * r.x) / den;
          if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) continue;
          int id = static_cast<int>(xs.size());
          xs.push_back({i, j, zat(i, static_cast<int>(a), t), zat(j, static_cast<int>(b), u)});
          events[i].push_back({static_cast<int>(a), t, id, 0});
          events[j].push_back({static_cast<int>(b), u, id, 1});
        }
  int nn = static_cast<int>(spec.nodes.size());
  int nx = static_cast<int>(xs.size());
  Piece pc;
  pc.node_halves.assign(nn + nx, {});
  std::vector<std::vector<std::pair<double, int>>> around(nn + nx);
  // xh[x][occ] collects the two halves of occurrence occ (0: curve ci, 1: curve cj)
  std::vector<std::array<std::vector<int>, 2>> xh(nx);
  pc.port_half.assign(nn, -1);
  pc.port_pass.assign(nn, -1);
  auto new_half = [&]() {
    pc.sigma.push_back(-1);
    pc.alpha.push_back(-1);
    return static_cast<int>(pc.sigma.size()) - 1;
  };
  auto dir = [&](int i, int seg, bool forward) {
    Pt a = pts[i][seg], b = pts[i][seg + 1];
    return forward ? std::atan2(b.y - a.y, b.x - a.x) : std::atan2(a.y - b.y, a.x - b.x);
  };
  for (int i = 0; i < nc; ++i) {
    std::sort(events[i].begin(), events[i].end());
    auto& c = spec.curves[i];
    int last = static_cast<int>(pts[i].size()) - 2;
    // stops: node `from`, crossings, node `to`
    struct Stop {
      int node;  // index into nodes or nn + crossing
      int seg;
      int occ;
    };
    std::vector<Stop> stops{{c.from, 0, -1}};
    for (auto& e : events[i]) stops.push_back({nn + e.crossing, e.seg, e.occ});
    stops.push_back({c.to, last, -1});
    for (size_t k = 0; k + 1 < stops.size(); ++k) {
      auto A = stops[k], B = stops[k + 1];
      bool a_port = A.node < nn && spec.port[A.node];
      bool b_port = B.node < nn && spec.port[B.node];
      if (a_port && b_port) {
        pc.port_pass[A.node] = B.node;
        pc.port_pass[B.node] = A.node;
        continue;
      }
      int ha = -1, hb = -1;
      if (!a_port) {
        ha = new_half();
        around[A.node].push_back({dir(i, A.seg, true), ha});
      }
      if (!b_port) {
        hb = new_half();
        around[B.node].push_back({dir(i, B.seg, false), hb});
      }
      if (ha >= 0 && hb >= 0) {
        pc.alpha[ha] = hb;
        pc.alpha[hb] = ha;
      }
      if (a_port) pc.port_half[A.node] = hb;
      if (b_port) pc.port_half[B.node] = ha;
      if (A.node >= nn) xh[A.node - nn][A.occ].push_back(ha);
      if (B.node >= nn) xh[B.node - nn][B.occ].push_back(hb);
    }
  }
  for (int v = 0; v < nn + nx; ++v) {
    if (v < nn && spec.port[v]) continue;
    auto& ar = around[v];
    std::sort(ar.begin(), ar.end());
    for (size_t k = 0; k < ar.size(); ++k) {
      pc.sigma[ar[k].second] = ar[(k + 1) % ar.size()].second;
      pc.node_halves[v].push_back(ar[k].second);
    }
  }
  for (int x = 0; x < nx; ++x) {
    if (around[nn + x].size() != 4) throw MapError("piece crossing without four strands");
    if (xs[x].zi == xs[x].zj) throw MapError("piece crossing at equal heights");
    // the two halves of one strand are opposite at the crossing
    auto& o = xh[x][xs[x].zi > xs[x].zj ? 0 : 1];
    if (o.size() != 2 || pc.sigma[pc.sigma[o[0]]] != o[1]) throw MapError("piece crossing strands not opposite");
    std::array<int, 2> over{o[0], o[1]};
    pc.crossings.push_back({over});
  }
  return pc;
}

// Attach a piece: ext[p] is the diagram half-edge glued at port p. Returns the diagram and the
// offset of the piece half-edges.
SpatialDiagram attach(const SpatialDiagram& d, const Piece& pc, const std::vector<int>& ext) {
  SpatialDiagram r = d;
  int n = d.base.halfedges();
  for (size_t h = 0; h < pc.sigma.size(); ++h) {
    if (pc.sigma[h] < 0) throw MapError("piece half-edge outside any node");
    r.base.sigma.push_back(pc.sigma[h] + n);
    r.base.alpha.push_back(pc.alpha[h] >= 0 ? pc.alpha[h] + n : -1);
  }
  r.base.sign.clear();
  for (size_t p = 0; p < ext.size(); ++p) {
    if (ext[p] < 0) continue;
    if (pc.port_half[p] >= 0) {
      int h = pc.port_half[p] + n;
      r.base.alpha[ext[p]] = h;
      r.base.alpha[h] = ext[p];
    } else if (pc.port_pass[p] >= 0) {
      int q = ext[pc.port_pass[p]];
      r.base.alpha[ext[p]] = q;
      r.base.alpha[q] = ext[p];
    } else {
      throw MapError("port without a strand");
    }
  }
  for (auto c : pc.crossings) r.crossings.push_back({{c.over[0] + n, c.over[1] + n}});
  return r;
}

SpatialDiagram drop_halfedges(const SpatialDiagram& d, const std::vector<char>& gone) {
  int n = d.base.halfedges();
  std::vector<int> nl(n, -1);
  int k = 0;
  for (int h = 0; h < n; ++h)
    if (!gone[h]) nl[h] = k++;
  SpatialDiagram r;
  r.base.sigma.resize(k);
  r.base.alpha.resize(k);
  r.base.iso = d.base.iso;
  for (int h = 0; h < n; ++h) {
    if (gone[h]) continue;
    if (gone[d.base.sigma[h]] || gone[d.base.alpha[h]]) throw MapError("dropping a partial vertex or edge");
    r.base.sigma[nl[h]] = nl[d.base.sigma[h]];
    r.base.alpha[nl[h]] = nl[d.base.alpha[h]];
  }
  for (auto& c : d.crossings)
    if (!gone[c.over[0]]) r.crossings.push_back({{nl[c.over[0]], nl[c.over[1]]}});
  return r;
}

Pt polar(double r, double deg) {
  double a = deg * M_PI / 180.0;
  return {r * std::cos(a), r * std::sin(a)};
}

// R2 piece: strand A along y = 0 (ports 0 -> 1), strand B from port 2 to port 3 dipping
// under or over A twice. Without `pair` the strands pass straight.
Piece r2_piece(bool b_over, bool pair) {
  PieceSpec s;
  s.nodes = {{-6, 0}, {6, 0}, {-6, 3}, {6, 3}};
  s.port = {1, 1, 1, 1};
  s.curves.push_back({0, 1, {}, {0}});
  if (pair)
    s.curves.push_back({2, 3, {{-1, -1.5}, {1, -1.5}}, {b_over ? 1.0 : -1.0}});
  else
    s.curves.push_back({2, 3, {}, {1}});
  return build_piece(s);
}

// R3 piece: lines A (ports 0 -> 1) and B (2 -> 3) cross at the origin; C (4 -> 5) passes on
// one side of that crossing. Heights are a permutation of 0, 1, 2.
Piece r3_piece(const std::vector<int>& h, int side) {
  PieceSpec s;
  s.nodes = {{-6, -3}, {6, 3}, {-6, 3}, {6, -3}, {-7, 0}, {7, 0}};
  s.port = {1, 1, 1, 1, 1, 1};
  double y = side ? -1 : 1;
  s.curves.push_back({0, 1, {}, {double(h[0])}});
  s.curves.push_back({2, 3, {}, {double(h[1])}});
  s.curves.push_back({4, 5, {{-4, y}, {4, y}}, {double(h[2])}});
  return build_piece(s);
}

// IV piece: a vertex with k edges to ports 0..k-1 (the first `upper` of them above the
// horizontal), and a strand between ports k and k+1 passing above or below the vertex.
Piece iv_piece(int k, int upper, bool over, int side) {
  PieceSpec s;
  s.nodes.push_back({0, 0});
  s.port.push_back(0);
  int lower = k - upper;
  for (int i = 0; i < upper; ++i) {
    s.nodes.push_back(polar(6.5, 30 + 120.0 * (i + 0.5) / upper));
    s.port.push_back(1);
  }
  for (int i = 0; i < lower; ++i) {
    s.nodes.push_back(polar(6.5, 210 + 120.0 * (i + 0.5) / lower));
    s.port.push_back(1);
  }
  s.nodes.push_back({-7, 0});
  s.nodes.push_back({7, 0});
  s.port.push_back(1);
  s.port.push_back(1);
  for (int i = 0; i < k; ++i) s.curves.push_back({0, i + 1, {}, {0}});
  double y = side ? -2 : 2;
  s.curves.push_back({k + 1, k + 2, {{-2, y}, {2, y}}, {over ? 1.0 : -1.0}});
  Piece pc = build_piece(s);
  // renumber ports: drop the vertex node so ports are 0..k+1
  pc.port_half.erase(pc.port_half.begin());
  pc.port_pass.erase(pc.port_pass.begin());
  for (auto& p : pc.port_pass)
    if (p > 0) --p;
  return pc;
}

// edge half-edges of the edge through h, oriented away from h: (h, alpha h)
std::vector<int> strand_ports(const CombMap& m, int h) { return {h, m.alpha[h]}; }

int edge_of(const CombMap& m, int h) { return std::min(h, m.alpha[h]); }

}  // namespace

// ---------------------------------------------------------------- moves

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::IV: return "IV";
    case MoveKind::CrossingChange: return "crossing-change";
    case MoveKind::Virtualization: return "virtualization";
    case MoveKind::Forbidden: return "forbidden";
    case MoveKind::VirtualRelabel: return "virtual";
  }
  return "?";
}

namespace {

int crossing_at(const SpatialDiagram& d, int h) {
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    int a = d.crossings[i].over[0];
    int x = a;
    do {
      if (x == h) return static_cast<int>(i);
      x = d.base.sigma[x];
    } while (x != a);
  }
  return -1;
}

void need(bool ok, const char* what) {
  if (!ok) throw MoveError(std::string("move site mismatch: ") + what);
}

}  // namespace

SpatialDiagram apply_move(const SpatialDiagram& d, MoveKind k, const MoveSite& site) {
  require_valid(d);
  const CombMap& m = d.base;
  int n = m.halfedges();
  auto hv = site.halfedges;
  for (int h : hv) need(h >= 0 && h < n, "half-edge out of range");
  switch (k) {
    case MoveKind::R1: {
      need(hv.size() == 1, "R1 takes one half-edge");
      int h = hv[0], h2 = m.alpha[h];
      SpatialDiagram r = d;
      // crossing (w, lb, la, e); strands w-la and lb-e; loop la-lb
      int w = n, lb = n + 1, la = n + 2, e = n + 3;
      r.base.sigma.insert(r.base.sigma.end(), {lb, la, e, w});
      r.base.alpha.insert(r.base.alpha.end(), {h, la, lb, h2});
      r.base.alpha[h] = w;
      r.base.alpha[h2] = e;
      r.base.sign.clear();
      bool first_over = site.params.empty() || site.params[0];
      r.crossings.push_back({first_over ? std::array<int, 2>{w, la} : std::array<int, 2>{lb, e}});
      return r;
    }
    case MoveKind::R2: {
      need(hv.size() == 2 && edge_of(m, hv[0]) != edge_of(m, hv[1]), "R2 takes half-edges of two edges");
      bool over = site.params.empty() || site.params[0];
      auto a = strand_ports(m, hv[0]), b = strand_ports(m, hv[1]);
      return attach(d, r2_piece(over, true), {a[0], a[1], b[0], b[1]});
    }
    case MoveKind::R3: {
      need(hv.size() == 3, "R3 takes three half-edges");
      std::set<int> es{edge_of(m, hv[0]), edge_of(m, hv[1]), edge_of(m, hv[2])};
      need(es.size() == 3, "R3 needs three distinct edges");
      need(site.params.size() == 4, "R3 params: three heights and a side");
      std::vector<int> h(site.params.begin(), site.params.begin() + 3);
      auto a = strand_ports(m, hv[0]), b = strand_ports(m, hv[1]), c = strand_ports(m, hv[2]);
      return attach(d, r3_piece(h, site.params[3]), {a[0], a[1], b[0], b[1], c[0], c[1]});
    }
    case MoveKind::IV: {
      need(hv.size() == 2 && site.params.size() == 3, "IV takes {vertex half-edge, strand half-edge} and 3 params");
      int h0 = hv[0];
      need(crossing_at(d, h0) < 0, "IV vertex is a crossing");
      std::vector<int> rot;
      int x = h0;
      do {
        rot.push_back(x);
        x = m.sigma[x];
      } while (x != h0);
      for (int a : rot) {
        need(std::find(rot.begin(), rot.end(), m.alpha[a]) == rot.end(), "IV vertex carries a loop");
        need(edge_of(m, a) != edge_of(m, hv[1]), "IV strand is incident to the vertex");
      }
      int kdeg = static_cast<int>(rot.size());
      int upper = site.params[1];
      need(upper >= 0 && upper <= kdeg, "IV split out of range");
      Piece pc = iv_piece(kdeg, upper, site.params[0] != 0, site.params[2]);
      std::vector<int> ext;
      for (int a : rot) ext.push_back(m.alpha[a]);
      auto s = strand_ports(m, hv[1]);
      ext.push_back(s[0]);
      ext.push_back(s[1]);
      SpatialDiagram r = attach(d, pc, ext);
      std::vector<char> gone(r.base.halfedges(), 0);
      for (int a : rot) gone[a] = 1;
      return drop_halfedges(r, gone);
    }
    case MoveKind::CrossingChange:
    case MoveKind::Virtualization: {
      need(hv.size() == 1, "takes one half-edge at a crossing");
      int i = crossing_at(d, hv[0]);
      need(i >= 0, "half-edge is not at a crossing");
      SpatialDiagram r = d;
      int a = d.crossings[i].over[0];
      if (k == MoveKind::CrossingChange) {
        int b = m.sigma[a];
        r.crossings[i].over = {b, m.sigma[m.sigma[b]]};
      } else {
        int b = m.sigma[a], c = m.sigma[b], e = m.sigma[c];
        r.base.sigma[a] = e, r.base.sigma[e] = c, r.base.sigma[c] = b, r.base.sigma[b] = a;
      }
      return r;
    }
    case MoveKind::Forbidden: {
      need(hv.size() == 1, "forbidden move takes one half-edge");
      int out1 = hv[0];
      int x1 = crossing_at(d, out1);
      need(x1 >= 0, "half-edge is not at a crossing");
      int in1 = m.sigma[m.sigma[out1]];
      int in2 = m.alpha[out1];
      int x2 = crossing_at(d, in2);
      need(x2 >= 0 && x2 != x1, "strand does not run into another crossing");
      int out2 = m.sigma[m.sigma[in2]];
      int ext1 = m.alpha[in1], ext2 = m.alpha[out2];
      need(ext1 != out2 && ext2 != in1, "strand closes up between the two crossings");
      SpatialDiagram r = d;
      auto& al = r.base.alpha;
      al[ext1] = in2, al[in2] = ext1;
      al[out2] = in1, al[in1] = out2;
      al[out1] = ext2, al[ext2] = out1;
      return r;
    }
    case MoveKind::VirtualRelabel: {
      need(static_cast<int>(site.params.size()) == n, "relabel needs a permutation");
      std::vector<char> seen(n, 0);
      for (int p : site.params) {
        need(p >= 0 && p < n && !seen[p], "not a permutation");
        seen[p] = 1;
      }
      SpatialDiagram r;
      r.base = relabel(m, site.params);
      for (auto& c : d.crossings) r.crossings.push_back({{site.params[c.over[0]], site.params[c.over[1]]}});
      return r;
    }
  }
  throw MoveError("unknown move");
}

std::optional<MoveSite> random_site(const SpatialDiagram& d, MoveKind k, std::mt19937& rng) {
  const CombMap& m = d.base;
  int n = m.halfedges();
  if (n == 0) return std::nullopt;
  auto pick = [&](int hi) { return static_cast<int>(rng() % static_cast<unsigned>(hi)); };
  MoveSite s;
  switch (k) {
    case MoveKind::R1:
      s.halfedges = {pick(n)};
      s.params = {pick(2)};
      return s;
    case MoveKind::R2: {
      if (m.edge_count() < 2) return std::nullopt;
      int a = pick(n), b;
      do b = pick(n);
      while (edge_of(m, a) == edge_of(m, b));
      s.halfedges = {a, b};
      s.params = {pick(2)};
      return s;
    }
    case MoveKind::R3: {
      if (m.edge_count() < 3) return std::nullopt;
      std::vector<int> hs;
      std::set<int> es;
      while (hs.size() < 3) {
        int h = pick(n);
        if (es.insert(edge_of(m, h)).second) hs.push_back(h);
      }
      std::vector<int> h{0, 1, 2};
      std::shuffle(h.begin(), h.end(), rng);
      s.halfedges = hs;
      s.params = {h[0], h[1], h[2], pick(2)};
      return s;
    }
    case MoveKind::IV: {
      std::vector<int> cands;
      auto orbits = vertex_orbits(m);
      std::vector<char> is_cross(n, 0);
      for (auto& c : d.crossings) {
        int x = c.over[0];
        do {
          is_cross[x] = 1;
          x = m.sigma[x];
        } while (x != c.over[0]);
      }
      for (auto& o : orbits) {
        if (o.empty() || is_cross[o[0]]) continue;
        bool loop = false;
        for (int h : o)
          if (std::find(o.begin(), o.end(), m.alpha[h]) != o.end()) loop = true;
        if (!loop) cands.push_back(o[pick(static_cast<int>(o.size()))]);
      }
      std::shuffle(cands.begin(), cands.end(), rng);
      for (int h0 : cands) {
        std::set<int> inc;
        int x = h0;
        int deg = 0;
        do {
          inc.insert(edge_of(m, x));
          ++deg;
          x = m.sigma[x];
        } while (x != h0);
        std::vector<int> others;
        for (int h = 0; h < n; ++h)
          if (!inc.count(edge_of(m, h))) others.push_back(h);
        if (others.empty()) continue;
        s.halfedges = {h0, others[pick(static_cast<int>(others.size()))]};
        s.params = {pick(2), pick(deg + 1), pick(2)};
        return s;
      }
      return std::nullopt;
    }
    case MoveKind::CrossingChange:
    case MoveKind::Virtualization:
      if (d.crossings.empty()) return std::nullopt;
      s.halfedges = {d.crossings[pick(static_cast<int>(d.crossings.size()))].over[0]};
      return s;
    case MoveKind::Forbidden: {
      std::vector<int> cands;
      for (auto& c : d.crossings) {
        int x = c.over[0];
        do {
          int in2 = m.alpha[x];
          int x1 = crossing_at(d, x), x2 = crossing_at(d, in2);
          if (x2 >= 0 && x2 != x1) {
            int in1 = m.sigma[m.sigma[x]], out2 = m.sigma[m.sigma[in2]];
            if (m.alpha[in1] != out2) cands.push_back(x);
          }
          x = m.sigma[x];
        } while (x != c.over[0]);
      }
      if (cands.empty()) return std::nullopt;
      s.halfedges = {cands[pick(static_cast<int>(cands.size()))]};
      return s;
    }
    case MoveKind::VirtualRelabel: {
      s.params.resize(n);
      std::iota(s.params.begin(), s.params.end(), 0);
      std::shuffle(s.params.begin(), s.params.end(), rng);
      return s;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- obstruction

bool ObstructionClass::is_zero() const { return std::all_of(rep.begin(), rep.end(), [](long c) { return c == 0; }); }

std::string ObstructionClass::str() const {
  std::ostringstream os;
  bool first = true;
  int idx = 0;
  for (int e = 0; e < edges; ++e)
    for (int f = e + 1; f < edges; ++f, ++idx) {
      long c = rep[idx];
      if (!c) continue;
      if (first) os << (c < 0 ? "-" : "");
      else os << (c < 0 ? " - " : " + ");
      if (std::labs(c) != 1) os << std::labs(c) << "*";
      os << "e" << e << "^e" << f;
      first = false;
    }
  return first ? "0" : os.str();
}

namespace {

// Edges of G': base edges joined through opposite half-edges at crossings.
struct Chains {
  int count = 0;
  std::vector<int> id;          // per half-edge
  std::vector<int> dir;         // per half-edge: +1 if the chain leaves through it, -1 if it enters
  std::vector<char> at_cross;   // per half-edge
};

Chains chain_structure(const SpatialDiagram& d, const std::vector<int>& halfedge_order) {
  const CombMap& m = d.base;
  int n = m.halfedges();
  Chains c;
  c.at_cross.assign(n, 0);
  std::vector<int> opposite(n, -1);
  for (auto& x : d.crossings) {
    int a = x.over[0], b = m.sigma[a], cc = m.sigma[b], dd = m.sigma[cc];
    opposite[a] = cc, opposite[cc] = a, opposite[b] = dd, opposite[dd] = b;
    c.at_cross[a] = c.at_cross[b] = c.at_cross[cc] = c.at_cross[dd] = 1;
  }
  std::vector<int> order = halfedge_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) throw MapError("half-edge order has the wrong length");
  c.id.assign(n, -1);
  c.dir.assign(n, 0);
  for (int h0 : order) {
    if (c.id[h0] >= 0) continue;
    // walk back to a real vertex end (or around a closed chain) then forward
    int start = h0;
    int x = h0;
    for (;;) {
      if (!c.at_cross[x]) {
        start = x;
        break;
      }
      x = m.alpha[opposite[x]];
      if (x == h0) break;
    }
    int k = c.count++;
    x = start;
    for (;;) {
      // x leaves its node along the chain
      c.id[x] = k, c.dir[x] = 1;
      int y = m.alpha[x];
      c.id[y] = k, c.dir[y] = -1;
      if (!c.at_cross[y]) break;
      x = opposite[y];
      if (x == start) break;
    }
  }
  return c;
}

int pair_count(int E) { return E * (E - 1) / 2; }

int pair_index(int E, int e, int f) {
  if (e > f) std::swap(e, f);
  return e * (2 * E - e - 1) / 2 + (f - e - 1);
}

}  // namespace

ObstructionClass obstruction_z2(const SpatialDiagram& d, const std::vector<int>& halfedge_order) {
  require_valid(d);
  const CombMap& m = d.base;
  Chains ch = chain_structure(d, halfedge_order);
  int E = ch.count, P = pair_count(E);
  ObstructionClass oc;
  oc.edges = E;
  oc.rep.assign(P, 0);
  for (auto& c : d.crossings) {
    int e = ch.id[c.over[0]], f = ch.id[m.sigma[c.over[0]]];
    if (e != f) oc.rep[pair_index(E, e, f)] ^= 1;
  }
  // coboundaries delta(x, e) for every vertex x of G' and edge e
  std::vector<std::vector<char>> rows;
  for (auto& o : vertex_orbits(m)) {
    if (o.empty() || ch.at_cross[o[0]]) continue;
    for (int e = 0; e < E; ++e) {
      std::vector<char> row(P, 0);
      bool any = false;
      for (int h : o) {
        int f = ch.id[h];
        if (f == e) continue;
        row[pair_index(E, e, f)] ^= 1;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  // reduced row echelon form over GF(2)
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < P && r < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][col])
        for (int j = 0; j < P; ++j) rows[i][j] ^= rows[r][j];
    pivots.push_back(col);
    ++r;
  }
  for (int i = 0; i < r; ++i)
    if (oc.rep[pivots[i]])
      for (int j = 0; j < P; ++j) oc.rep[j] ^= rows[i][j];
  return oc;
}

int crossing_sign(const SpatialDiagram& d, int i) {
  const CombMap& m = d.base;
  Chains ch = chain_structure(d, {});
  int a = d.crossings[i].over[0], c = d.crossings[i].over[1];
  int b = m.sigma[a], e = m.sigma[c];
  int over_out = ch.dir[a] > 0 ? a : c;
  int under_out = ch.dir[b] > 0 ? b : e;
  return m.sigma[over_out] == under_out ? 1 : -1;
}

ObstructionClass obstruction_z(const SpatialDiagram& d, const std::vector<int>& halfedge_order) {
  require_valid(d);
  const CombMap& m = d.base;
  Chains ch = chain_structure(d, halfedge_order);
  int E = ch.count, P = pair_count(E);
  ObstructionClass oc;
  oc.modulus = 0;
  oc.edges = E;
  oc.rep.assign(P, 0);
  // sign(e ^ f) for e over f, with e ^ f = -(f ^ e)
  auto wedge_add = [&](std::vector<Integer>& v, int e, int f, long s) {
    if (e == f) return;
    v[pair_index(E, e, f)] += e < f ? s : -s;
  };
  std::vector<Integer> cls(P, 0);
  for (auto& c : d.crossings) {
    int a = c.over[0], b = m.sigma[a];
    int over_out = ch.dir[a] > 0 ? a : c.over[1];
    int under_out = ch.dir[b] > 0 ? b : m.sigma[c.over[1]];
    long s = m.sigma[over_out] == under_out ? 1 : -1;
    wedge_add(cls, ch.id[a], ch.id[b], s);
  }
  std::vector<std::vector<Integer>> rows;
  for (auto& o : vertex_orbits(m)) {
    if (o.empty() || ch.at_cross[o[0]]) continue;
    for (int e = 0; e < E; ++e) {
      std::vector<Integer> row(P, 0);
      for (int h : o) wedge_add(row, ch.id[h], e, ch.dir[h]);
      if (std::any_of(row.begin(), row.end(), [](const Integer& z) { return z != 0; })) rows.push_back(std::move(row));
    }
  }
  // Hermite normal form: positive pivots, entries above each pivot reduced into [0, pivot)
  std::vector<int> pivots;
  int r = 0;
  int R = static_cast<int>(rows.size());
  for (int col = 0; col < P && r < R; ++col) {
    for (;;) {
      int sel = -1;
      for (int i = r; i < R; ++i)
        if (rows[i][col] != 0 && (sel < 0 || abs(rows[i][col]) < abs(rows[sel][col]))) sel = i;
      if (sel < 0) break;
      std::swap(rows[r], rows[sel]);
      bool done = true;
      for (int i = r + 1; i < R; ++i) {
        if (rows[i][col] == 0) continue;
        Integer qt;
        mpz_fdiv_q(qt.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (int j = col; j < P; ++j) rows[i][j] -= qt * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= R || rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (int j = col; j < P; ++j) rows[r][j] = -rows[r][j];
    pivots.push_back(col);
    ++r;
  }
  auto reduce = [&](std::vector<Integer>& v, int upto) {
    for (int i = 0; i < upto; ++i) {
      int col = pivots[i];
      Integer qt;
      mpz_fdiv_q(qt.get_mpz_t(), v[col].get_mpz_t(), rows[i][col].get_mpz_t());
      if (qt != 0)
        for (int j = col; j < P; ++j) v[j] -= qt * rows[i][j];
    }
  };
  for (int i = r - 1; i >= 0; --i) {
    for (int k = 0; k < i; ++k) {
      int col = pivots[i];
      Integer qt;
      mpz_fdiv_q(qt.get_mpz_t(), rows[k][col].get_mpz_t(), rows[i][col].get_mpz_t());
      if (qt != 0)
        for (int j = col; j < P; ++j) rows[k][j] -= qt * rows[i][j];
    }
  }
  reduce(cls, r);
  for (int j = 0; j < P; ++j) {
    if (!cls[j].fits_slong_p()) throw MapError("obstruction coefficient overflow");
    oc.rep[j] = cls[j].get_si();
  }
  return oc;
}

// ---------------------------------------------------------------- reports

namespace {

bool cubic_diagram(const SpatialDiagram& d) {
  auto cv = crossing_vertices(d);
  auto deg = vertex_degrees(d.base);
  for (int v = 0; v < static_cast<int>(deg.size()); ++v)
    if (std::find(cv.begin(), cv.end(), v) == cv.end() && deg[v] != 3) return false;
  return true;
}

}  // namespace

NonclassicalityReport nonclassicality_report(const SpatialDiagram& d) {
  NonclassicalityReport r;
  r.rs = yamada(d, Variant::S);
  r.rf = yamada(d, Variant::F);
  r.distinct = r.rs != r.rf;
  r.cubic = cubic_diagram(d);
  r.not_pliable = r.distinct && r.cubic;
  r.verdict = r.distinct ? "nonclassical" : "inconclusive";
  return r;
}

CheckReport special_evaluation_checks(const SpatialDiagram& d) {
  CheckReport r;
  HalfLaurent rs = yamada(d, Variant::S), rf = yamada(d, Variant::F);
  CombMap g = underlying_map(d);
  HalfLaurent s = s_poly(g), f = flow_poly(g);
  r.add("R^F(-1) = F(0)", rf.eval(-1), f.eval(0));
  r.add("F(0) = S(0)", f.eval(0), s.eval(0));
  r.add("S(0) = R^S(-1)", s.eval(0), rs.eval(-1));
  r.add("R^S(1) = S(4)", rs.eval(1), s.eval(4));
  if (obstruction_z2(d).is_zero()) {
    r.add("obstruction zero: R^F(1) = F(4)", rf.eval(1), f.eval(4));
    auto p = planarity_by_flips(g).witness;
    if (p) {
      auto deg = vertex_degrees(g);
      long sum = 0;
      for (int v : *p) sum += deg[v];
      Rational rs1 = rs.eval(1);
      r.add("planar flip: R^F(1) = (-1)^sum deg R^S(1)", rf.eval(1), sum % 2 ? Rational(-rs1) : rs1);
    }
  }
  return r;
}

GoldenResult golden_identity(const SpatialDiagram& d, Variant v) {
  HalfLaurent R = yamada(d, v);
  Cyclotomic phi = Cyclotomic::zeta(10, 1) + Cyclotomic::zeta(10, 9);
  Cyclotomic a = eval_cyclotomic(R, 10, 1);
  Cyclotomic b = eval_cyclotomic(R, 5, -1).embed(10);
  GoldenResult g;
  g.lhs = a;
  g.rhs = phi.pow(spatial_edge_count(d)) * b * b;
  g.holds = g.lhs == g.rhs;
  return g;
}

bool golden_identity_check(const SpatialDiagram& d) {
  require_valid(d);
  if (!cubic_diagram(d)) throw MapError("golden identity needs a cubic diagram");
  if (euler_data(d.base).genus != 0) throw MapError("golden identity needs a classical diagram (planar base)");
  return golden_identity(d, Variant::S).holds && golden_identity(d, Variant::F).holds;
}

CheckReport forbidden_move_checks(const SpatialDiagram& before, const SpatialDiagram& after) {
  CheckReport r;
  HalfLaurent s0 = yamada(before, Variant::S), s1 = yamada(after, Variant::S);
  HalfLaurent f0 = yamada(before, Variant::F), f1 = yamada(after, Variant::F);
  struct Pt {
    int n;
    long k;
    const char* name;
  };
  std::vector<Pt> s_pts = {{1, 0, "1"}, {2, 1, "-1"}, {3, 1, "e^{2pi i/3}"}, {3, 2, "e^{-2pi i/3}"}};
  std::vector<Pt> f_pts = s_pts;
  f_pts.push_back({4, 1, "i"});
  f_pts.push_back({4, 3, "-i"});
  for (auto& p : s_pts)
    r.add(std::string("R^S at q = ") + p.name, eval_cyclotomic(s0, p.n, p.k) == eval_cyclotomic(s1, p.n, p.k),
          eval_cyclotomic(s0, p.n, p.k).str() + " | " + eval_cyclotomic(s1, p.n, p.k).str());
  for (auto& p : f_pts)
    r.add(std::string("R^F at q = ") + p.name, eval_cyclotomic(f0, p.n, p.k) == eval_cyclotomic(f1, p.n, p.k),
          eval_cyclotomic(f0, p.n, p.k).str() + " | " + eval_cyclotomic(f1, p.n, p.k).str());
  return r;
}

SpatialDiagram straight_line_diagram(const std::vector<std::array<double, 2>>& points,
                                     const std::vector<std::array<int, 2>>& edges,
                                     const std::vector<double>& heights) {
  PieceSpec s;
  for (auto& p : points) s.nodes.push_back({p[0], p[1]});
  s.port.assign(points.size(), 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i][0] == edges[i][1]) throw MapError("straight-line diagrams have no loops");
    s.curves.push_back({edges[i][0], edges[i][1], {}, {heights.empty() ? double(i) : heights.at(i)}});
  }
  Piece pc = build_piece(s);
  SpatialDiagram d;
  d = attach(d, pc, {});
  for (size_t v = 0; v < points.size(); ++v)
    if (pc.node_halves[v].empty()) d.base.iso.push_back(1);
  return d;
}

// ---------------------------------------------------------------- fixtures

namespace fixtures {

SpatialDiagram theta_t_as_spatial() { return crossingless(theta_t()); }

SpatialDiagram k33_drawn() {
  std::vector<std::array<double, 2>> pts = {{0, 2}, {1.8, 1.1}, {2, -1}, {0.1, -2}, {-2, -0.9}, {-1.9, 1}};
  return straight_line_diagram(pts, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

Pt trefoil_pt(double t) { return {std::sin(t) + 2 * std::sin(2 * t), std::cos(t) - 2 * std::cos(2 * t)}; }
double trefoil_z(double t) { return -std::sin(3 * t); }

// open trefoil arc from port 0 to port 1, cut at the outermost point t = pi/3
Piece trefoil_arc() {
  PieceSpec s;
  double t0 = M_PI / 3, del = 0.08;
  Pt a = trefoil_pt(t0 + del), b = trefoil_pt(t0 + 2 * M_PI - del);
  s.nodes = {{a.x * 1.6, a.y * 1.6}, {b.x * 1.6, b.y * 1.6}};
  s.port = {1, 1};
  Curve c{0, 1, {}, {}};
  c.z.push_back(0);
  const int steps = 180;
  for (int i = 0; i <= steps; ++i) {
    double t = t0 + del + (2 * M_PI - 2 * del) * i / steps;
    c.via.push_back(trefoil_pt(t));
    c.z.push_back(trefoil_z(t));
  }
  c.z.push_back(0);
  s.curves.push_back(c);
  Piece pc = build_piece(s);
  if (pc.crossings.size() != 3) throw MapError("trefoil arc lost a crossing");
  return pc;
}

}  // namespace

SpatialDiagram trefoil() {
  // close the arc through a single degree-2 vertex
  CombMap v = make_map({{0, 1}}, {{0, 1}});
  SpatialDiagram d = crossingless(v);
  return attach(d, trefoil_arc(), {0, 1});
}

SpatialDiagram knotted_theta() {
  SpatialDiagram d = crossingless(theta_p());
  auto el = edge_list(d.base);
  return attach(d, trefoil_arc(), {el[0][0], el[0][1]});
}

SpatialDiagram k4_r2() {
  SpatialDiagram d = crossingless(k4());
  // two edges on a common face, oriented so the result stays planar
  auto el = edge_list(d.base);
  for (int i = 0; i < static_cast<int>(el.size()); ++i)
    for (int j = 0; j < static_cast<int>(el.size()); ++j) {
      if (i == j) continue;
      for (int oi = 0; oi < 2; ++oi)
        for (int oj = 0; oj < 2; ++oj) {
          MoveSite s{{el[i][oi], el[j][oj]}, {1}};
          SpatialDiagram r = apply_move(d, MoveKind::R2, s);
          if (euler_data(r.base).genus == 0) return r;
        }
    }
  throw MapError("no planar R2 site on K4");
}

std::vector<SpatialDiagram> classical_cubic_samples(int max_vertices, int max_crossings, unsigned seed,
                                                    int per_graph) {
  CubicOptions opt;
  opt.max_vertices = max_vertices;
  std::mt19937 rng(seed);
  std::vector<SpatialDiagram> out;
  for (auto& g : cubic_graphs(opt)) {
    CombMap m = map_from_graph(g);
    auto pl = planarity_by_flips(m);
    if (!pl.witness) continue;
    SpatialDiagram base = crossingless(vertex_flip_set(m, *pl.witness));
    out.push_back(base);
    const MoveKind kinds[] = {MoveKind::R2, MoveKind::R3, MoveKind::IV};
    int made = 0;
    for (int attempt = 0; attempt < 200 * per_graph && made < per_graph; ++attempt) {
      SpatialDiagram d = base;
      int target = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_crossings - 1)));
      bool ok = true;
      while (ok && static_cast<int>(d.crossings.size()) < target) {
        MoveKind k = kinds[rng() % 3];
        auto site = random_site(d, k, rng);
        if (!site) {
          ok = false;
          break;
        }
        SpatialDiagram next = apply_move(d, k, *site);
        if (static_cast<int>(next.crossings.size()) > max_crossings || euler_data(next.base).genus != 0) {
          ok = false;
          break;
        }
        d = std::move(next);
      }
      if (!ok || d.crossings.empty()) continue;
      out.push_back(std::move(d));
      ++made;
    }
  }
  return out;
}

}  // namespace fixtures

}  // namespace vg
