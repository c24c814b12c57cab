#include "virtgraph/combmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace vg {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Drop the half-edges marked in `gone` and renumber the rest densely. Vertices left
// without half-edges become isolated unless drop_emptied is set.
CombMap compact(const CombMap& m, const std::vector<char>& gone, bool drop_emptied = false) {
  int n = m.halfedges();
  std::vector<int> nl(n, -1);
  int k = 0;
  for (int h = 0; h < n; ++h)
    if (!gone[h]) nl[h] = k++;
  CombMap r;
  r.sigma.resize(k);
  r.alpha.resize(k);
  if (!m.twist.empty()) r.twist.resize(k);
  if (!m.sign.empty()) r.sign.resize(k);
  for (int h = 0; h < n; ++h) {
    if (gone[h]) continue;
    int s = m.sigma[h];
    while (gone[s]) s = m.sigma[s];
    r.sigma[nl[h]] = nl[s];
    r.alpha[nl[h]] = nl[m.alpha[h]];
    if (!m.twist.empty()) r.twist[nl[h]] = m.twist[h];
    if (!m.sign.empty()) r.sign[nl[h]] = m.sign[h];
  }
  r.iso = m.iso;
  // vertices that lost all their half-edges become isolated
  std::vector<char> seen(n, 0);
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    bool all_gone = true;
    int x = h;
    do {
      seen[x] = 1;
      if (!gone[x]) all_gone = false;
      x = m.sigma[x];
    } while (x != h);
    if (all_gone && !drop_emptied) r.iso.push_back(m.sign.empty() ? 1 : m.sign[h]);
  }
  return r;
}

std::vector<int> orbit_of(const std::vector<int>& perm, int h) {
  std::vector<int> o;
  int x = h;
  do {
    o.push_back(x);
    x = perm[x];
  } while (x != h);
  return o;
}

}  // namespace

bool CombMap::any_twist() const {
  for (char c : twist)
    if (c) return true;
  return false;
}

CombMap make_map(const std::vector<std::vector<int>>& rotations, const std::vector<std::array<int, 2>>& edges,
                 int isolated) {
  CombMap m;
  int n = 2 * static_cast<int>(edges.size());
  m.sigma.assign(n, -1);
  m.alpha.assign(n, -1);
  for (auto& rot : rotations) {
    if (rot.empty()) {
      ++isolated;
      continue;
    }
    for (size_t i = 0; i < rot.size(); ++i) {
      int h = rot[i];
      if (h < 0 || h >= n) throw MapError("half-edge id " + std::to_string(h) + " out of range");
      if (m.sigma[h] != -1) throw MapError("duplicate half-edge id " + std::to_string(h));
      m.sigma[h] = rot[(i + 1) % rot.size()];
    }
  }
  for (auto& e : edges) {
    for (int h : e)
      if (h < 0 || h >= n) throw MapError("half-edge id " + std::to_string(h) + " out of range");
    if (m.alpha[e[0]] != -1 || m.alpha[e[1]] != -1 || e[0] == e[1])
      throw MapError("half-edge used by two edges: " + std::to_string(m.alpha[e[0]] != -1 ? e[0] : e[1]));
    m.alpha[e[0]] = e[1];
    m.alpha[e[1]] = e[0];
  }
  for (int h = 0; h < n; ++h)
    if (m.sigma[h] == -1) throw MapError("half-edge id " + std::to_string(h) + " missing from vertices");
  m.iso.assign(isolated, 1);
  return m;
}

std::vector<std::string> validate(const CombMap& m) {
  std::vector<std::string> out;
  int n = m.halfedges();
  if (static_cast<int>(m.alpha.size()) != n) out.push_back("alpha and sigma sizes differ");
  if (n % 2) out.push_back("odd number of half-edges");
  if (!out.empty()) return out;
  std::vector<int> hit(n, 0);
  for (int h = 0; h < n; ++h) {
    if (m.sigma[h] < 0 || m.sigma[h] >= n) {
      out.push_back("sigma maps " + std::to_string(h) + " out of range");
      continue;
    }
    hit[m.sigma[h]]++;
  }
  for (int h = 0; h < n; ++h)
    if (hit[h] != 1) {
      out.push_back("sigma not bijective at " + std::to_string(h));
      break;
    }
  for (int h = 0; h < n; ++h) {
    int a = m.alpha[h];
    if (a < 0 || a >= n) {
      out.push_back("alpha maps " + std::to_string(h) + " out of range");
      continue;
    }
    if (a == h) out.push_back("alpha not fixed-point-free at " + std::to_string(h));
    else if (m.alpha[a] != h) out.push_back("alpha not an involution at " + std::to_string(h));
  }
  if (!m.twist.empty()) {
    if (static_cast<int>(m.twist.size()) != n) out.push_back("twist size mismatch");
    else
      for (int h = 0; h < n; ++h)
        if (m.alpha[h] >= 0 && m.alpha[h] < n && m.twist[h] != m.twist[m.alpha[h]])
          out.push_back("twist differs on the halves of an edge at " + std::to_string(h));
  }
  if (!m.sign.empty()) {
    if (static_cast<int>(m.sign.size()) != n) out.push_back("sign size mismatch");
    else if (out.empty())
      for (int h = 0; h < n; ++h) {
        if (m.sign[h] != 1 && m.sign[h] != -1) out.push_back("sign not +-1 at " + std::to_string(h));
        if (m.sign[m.sigma[h]] != m.sign[h]) out.push_back("sign not constant on vertex at " + std::to_string(h));
      }
  }
  for (auto s : m.iso)
    if (s != 1 && s != -1) out.push_back("isolated vertex sign not +-1");
  return out;
}

void require_valid(const CombMap& m) {
  auto d = validate(m);
  if (!d.empty()) throw MapError("invalid map: " + d.front());
}

std::vector<std::vector<int>> vertex_orbits(const CombMap& m) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(m.halfedges(), 0);
  for (int h = 0; h < m.halfedges(); ++h) {
    if (seen[h]) continue;
    auto o = orbit_of(m.sigma, h);
    for (int x : o) seen[x] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

int vertex_count(const CombMap& m) { return static_cast<int>(vertex_orbits(m).size()) + m.isolated(); }

std::vector<int> vertex_of_halfedge(const CombMap& m) {
  std::vector<int> v(m.halfedges(), -1);
  int k = 0;
  for (int h = 0; h < m.halfedges(); ++h) {
    if (v[h] != -1) continue;
    int x = h;
    do {
      v[x] = k;
      x = m.sigma[x];
    } while (x != h);
    ++k;
  }
  return v;
}

std::vector<std::array<int, 2>> edge_list(const CombMap& m) {
  std::vector<std::array<int, 2>> out;
  for (int h = 0; h < m.halfedges(); ++h)
    if (h < m.alpha[h]) out.push_back({h, m.alpha[h]});
  return out;
}

int edge_index(const CombMap& m, int h) {
  int lo = std::min(h, m.alpha[h]);
  int k = 0;
  for (int x = 0; x < lo; ++x)
    if (x < m.alpha[x]) ++k;
  return k;
}

static std::array<int, 2> edge_at(const CombMap& m, int e) {
  if (e < 0 || e >= m.edge_count()) throw MapError("no edge " + std::to_string(e));
  int k = 0;
  for (int h = 0; h < m.halfedges(); ++h)
    if (h < m.alpha[h]) {
      if (k == e) return {h, m.alpha[h]};
      ++k;
    }
  throw MapError("no edge " + std::to_string(e));
}

std::vector<int> vertex_degrees(const CombMap& m) {
  std::vector<int> d;
  for (auto& o : vertex_orbits(m)) d.push_back(static_cast<int>(o.size()));
  for (int i = 0; i < m.isolated(); ++i) d.push_back(0);
  return d;
}

int vertex_sign(const CombMap& m, int v) {
  auto orbits = vertex_orbits(m);
  int nv = static_cast<int>(orbits.size());
  if (v < 0 || v >= nv + m.isolated()) throw MapError("no vertex " + std::to_string(v));
  if (v >= nv) return m.iso[v - nv];
  if (m.sign.empty()) return orbits[v].size() % 2 ? -1 : 1;
  return m.sign[orbits[v][0]];
}

int face_count(const CombMap& m) {
  int n = m.halfedges();
  int faces = 0;
  if (!m.any_twist()) {
    std::vector<char> seen(n, 0);
    for (int h = 0; h < n; ++h) {
      if (seen[h]) continue;
      ++faces;
      int x = h;
      do {
        seen[x] = 1;
        x = m.sigma[m.alpha[x]];
      } while (x != h);
    }
    return faces + m.isolated();
  }
  // flags (h, side); a twisted edge switches the side; orbits come in pairs
  std::vector<int> inv(n);
  for (int h = 0; h < n; ++h) inv[m.sigma[h]] = h;
  std::vector<char> seen(2 * n, 0);
  int orbits = 0;
  for (int f = 0; f < 2 * n; ++f) {
    if (seen[f]) continue;
    ++orbits;
    int h = f / 2, side = f % 2;
    while (!seen[2 * h + side]) {
      seen[2 * h + side] = 1;
      int a = m.alpha[h];
      if (m.twist[h]) side ^= 1;
      h = side == 0 ? m.sigma[a] : inv[a];
    }
  }
  return orbits / 2 + m.isolated();
}

int component_count(const CombMap& m) {
  int n = m.halfedges();
  UnionFind uf(n);
  int comps = n;
  for (int h = 0; h < n; ++h) {
    if (uf.unite(h, m.sigma[h])) --comps;
    if (uf.unite(h, m.alpha[h])) --comps;
  }
  return comps + m.isolated();
}

EulerData euler_data(const CombMap& m) {
  require_valid(m);
  EulerData d;
  d.v = vertex_count(m);
  d.e = m.edge_count();
  d.b0 = component_count(m);
  d.b1 = d.e - d.v + d.b0;
  d.faces = face_count(m);
  d.euler_genus = 2 * d.b0 + d.e - d.v - d.faces;
  d.genus = d.euler_genus / 2;
  return d;
}

CombMap vertex_turn_over(const CombMap& m, int v) {
  auto orbits = vertex_orbits(m);
  if (v < 0 || v >= static_cast<int>(orbits.size()) + m.isolated()) throw MapError("no vertex " + std::to_string(v));
  if (v >= static_cast<int>(orbits.size())) return m;
  CombMap r = vertex_flip(m, v);
  if (r.twist.empty()) r.twist.assign(r.halfedges(), 0);
  for (int h : orbits[v]) {
    r.twist[h] ^= 1;
    r.twist[r.alpha[h]] ^= 1;
  }
  return r;
}

CombMap partial_dual(const CombMap& m, int e) {
  auto [a, b] = edge_at(m, e);
  auto vof = vertex_of_halfedge(m);
  if (!m.twisted(a)) {
    CombMap r = m;
    r.sigma[a] = m.sigma[b];
    r.sigma[b] = m.sigma[a];
    return r;
  }
  if (vof[a] != vof[b]) {
    CombMap r = vertex_turn_over(m, vof[b]);
    return partial_dual(r, e);
  }
  // twisted loop: (a X b Y) -> (a X b rev(Y)), toggling the twist of each half-edge of Y
  std::vector<int> rot = orbit_of(m.sigma, a);
  size_t pb = std::find(rot.begin(), rot.end(), b) - rot.begin();
  std::vector<int> Y(rot.begin() + pb + 1, rot.end());
  std::vector<int> nrot(rot.begin(), rot.begin() + pb + 1);
  nrot.insert(nrot.end(), Y.rbegin(), Y.rend());
  CombMap r = m;
  for (size_t i = 0; i < nrot.size(); ++i) r.sigma[nrot[i]] = nrot[(i + 1) % nrot.size()];
  for (int y : Y) {
    r.twist[y] ^= 1;
    r.twist[r.alpha[y]] ^= 1;
  }
  return r;
}

CombMap delete_edges(const CombMap& m, const std::vector<int>& edges) {
  std::vector<char> gone(m.halfedges(), 0);
  for (int e : edges) {
    auto [a, b] = edge_at(m, e);
    gone[a] = gone[b] = 1;
  }
  return compact(m, gone);
}

CombMap delete_edge(const CombMap& m, int e) { return delete_edges(m, {e}); }

CombMap contract(const CombMap& m, int e) { return delete_edge(partial_dual(m, e), e); }

CombMap delete_isolated_vertex(const CombMap& m, int v) {
  int nv = static_cast<int>(vertex_orbits(m).size());
  if (v < nv) throw MapError("vertex " + std::to_string(v) + " is not isolated");
  if (v >= nv + m.isolated()) throw MapError("no vertex " + std::to_string(v));
  CombMap r = m;
  r.iso.erase(r.iso.begin() + (v - nv));
  return r;
}

CombMap geometric_dual(const CombMap& m) {
  if (m.any_twist()) throw MapError("geometric_dual requires an untwisted map");
  CombMap r;
  r.alpha = m.alpha;
  r.sigma.resize(m.halfedges());
  for (int h = 0; h < m.halfedges(); ++h) r.sigma[h] = m.sigma[m.alpha[h]];
  r.iso.assign(m.isolated(), 1);
  return r;
}

CombMap vertex_flip(const CombMap& m, int v) {
  auto orbits = vertex_orbits(m);
  if (v < 0 || v >= static_cast<int>(orbits.size()) + m.isolated()) throw MapError("no vertex " + std::to_string(v));
  CombMap r = m;
  if (v >= static_cast<int>(orbits.size())) return r;
  for (int h : orbits[v]) r.sigma[m.sigma[h]] = h;
  return r;
}

CombMap vertex_flip_set(const CombMap& m, const std::vector<int>& vs) {
  auto orbits = vertex_orbits(m);
  CombMap r = m;
  for (int v : vs) {
    if (v < 0 || v >= static_cast<int>(orbits.size()) + m.isolated()) throw MapError("no vertex " + std::to_string(v));
    if (v >= static_cast<int>(orbits.size())) continue;
    for (int h : orbits[v]) r.sigma[m.sigma[h]] = h;
  }
  return r;
}

CombMap edge_twist(const CombMap& m, int e) {
  auto [a, b] = edge_at(m, e);
  CombMap r = m;
  if (r.twist.empty()) r.twist.assign(r.halfedges(), 0);
  r.twist[a] ^= 1;
  r.twist[b] ^= 1;
  return r;
}

CombMap with_parity_signs(const CombMap& m) {
  CombMap r = m;
  r.sign.assign(m.halfedges(), 1);
  for (auto& o : vertex_orbits(m))
    for (int h : o) r.sign[h] = o.size() % 2 ? -1 : 1;
  return r;
}

CombMap without_signs(const CombMap& m) {
  CombMap r = m;
  r.sign.clear();
  std::fill(r.iso.begin(), r.iso.end(), 1);
  return r;
}

CombMap set_vertex_sign(const CombMap& m, int v, int s) {
  if (s != 1 && s != -1) throw MapError("sign must be +-1");
  CombMap r = m.has_signs() ? m : with_parity_signs(m);
  auto orbits = vertex_orbits(r);
  int nv = static_cast<int>(orbits.size());
  if (v < 0 || v >= nv + r.isolated()) throw MapError("no vertex " + std::to_string(v));
  if (v >= nv)
    r.iso[v - nv] = static_cast<signed char>(s);
  else
    for (int h : orbits[v]) r.sign[h] = static_cast<signed char>(s);
  return r;
}

EdgeClass classify_edge(const CombMap& m, int e) {
  auto [a, b] = edge_at(m, e);
  auto vof = vertex_of_halfedge(m);
  EdgeClass c;
  c.loop = vof[a] == vof[b];
  CombMap d = delete_edge(m, e);
  c.bridge = component_count(d) == component_count(m) + 1;
  c.coloop = face_count(d) == face_count(m) + 1;
  return c;
}

bool interlaced(const CombMap& m, int e, int f) {
  if (e == f) throw MapError("interlaced requires distinct edges");
  if (!classify_edge(m, e).coloop || !classify_edge(m, f).coloop) return false;
  CombMap d = delete_edge(m, e);
  int f2 = f > e ? f - 1 : f;
  return !classify_edge(d, f2).coloop;
}

std::vector<int> coloops(const CombMap& m) {
  std::vector<int> out;
  for (int e = 0; e < m.edge_count(); ++e)
    if (classify_edge(m, e).coloop) out.push_back(e);
  return out;
}

bool has_bridge(const CombMap& m) {
  for (int e = 0; e < m.edge_count(); ++e)
    if (classify_edge(m, e).bridge) return true;
  return false;
}

CombMap disjoint_union(const CombMap& a, const CombMap& b) {
  CombMap r;
  int n = a.halfedges();
  r.sigma = a.sigma;
  r.alpha = a.alpha;
  for (int h = 0; h < b.halfedges(); ++h) {
    r.sigma.push_back(b.sigma[h] + n);
    r.alpha.push_back(b.alpha[h] + n);
  }
  if (a.any_twist() || b.any_twist()) {
    r.twist = a.twist.empty() ? std::vector<char>(n, 0) : a.twist;
    for (int h = 0; h < b.halfedges(); ++h) r.twist.push_back(b.twisted(h));
  }
  if (a.has_signs() || b.has_signs()) {
    CombMap as = a.has_signs() ? a : with_parity_signs(a);
    CombMap bs = b.has_signs() ? b : with_parity_signs(b);
    r.sign = as.sign;
    r.sign.insert(r.sign.end(), bs.sign.begin(), bs.sign.end());
  }
  r.iso = a.iso;
  r.iso.insert(r.iso.end(), b.iso.begin(), b.iso.end());
  return r;
}

CombMap edge_connect_sum(const CombMap& a, int ea, const CombMap& b, int eb, bool reverse_b) {
  auto [a1, a2] = edge_at(a, ea);
  auto [b1, b2] = edge_at(b, eb);
  CombMap r = disjoint_union(a, b);
  int n = a.halfedges();
  b1 += n;
  b2 += n;
  if (reverse_b) std::swap(b1, b2);
  // a1 -> a2 and b1 -> b2 co-oriented: cut both edges and join a1-b2, b1-a2
  r.alpha[a1] = b2;
  r.alpha[b2] = a1;
  r.alpha[b1] = a2;
  r.alpha[a2] = b1;
  if (!r.twist.empty()) {
    char t = static_cast<char>(r.twist[a1] ^ r.twist[b1]);
    r.twist[a1] = r.twist[b2] = t;
    r.twist[a2] = r.twist[b1] = 0;
  }
  return r;
}

CombMap vertex_connect_sum(const CombMap& a, int ha, const CombMap& b, int hb) {
  auto ra = orbit_of(a.sigma, ha);
  auto rb = orbit_of(b.sigma, hb);
  if (ra.size() != 3 || rb.size() != 3) throw MapError("vertex connect sum needs degree-3 vertices");
  for (int h : ra)
    if (std::find(ra.begin(), ra.end(), a.alpha[h]) != ra.end()) throw MapError("loop at connect-sum vertex");
  for (int h : rb)
    if (std::find(rb.begin(), rb.end(), b.alpha[h]) != rb.end()) throw MapError("loop at connect-sum vertex");
  CombMap r = disjoint_union(a, b);
  int n = a.halfedges();
  std::vector<char> gone(r.halfedges(), 0);
  int pa[3], pb[3];
  for (int i = 0; i < 3; ++i) {
    pa[i] = a.alpha[ra[i]];
    pb[i] = b.alpha[rb[i]] + n;
    gone[ra[i]] = 1;
    gone[rb[i] + n] = 1;
  }
  // ha faces hb; the rotations run oppositely
  int match[3] = {0, 2, 1};
  for (int i = 0; i < 3; ++i) {
    int x = pa[i], y = pb[match[i]];
    r.alpha[x] = y;
    r.alpha[y] = x;
    if (!r.twist.empty()) {
      char t = static_cast<char>(a.twisted(ra[i]) ^ b.twisted(rb[match[i]]));
      r.twist[x] = r.twist[y] = t;
    }
  }
  return compact(r, gone, true);
}

CombMap wedge(const CombMap& a, int ha, const CombMap& b, int hb) {
  CombMap r = disjoint_union(a, b);
  int n = a.halfedges();
  hb += n;
  int hb_pred = hb;
  while (r.sigma[hb_pred] != hb) hb_pred = r.sigma[hb_pred];
  int after = r.sigma[ha];
  r.sigma[ha] = hb;
  r.sigma[hb_pred] = after;
  if (r.has_signs()) {
    int s = r.sign[ha];
    int x = ha;
    do {
      r.sign[x] = static_cast<signed char>(s);
      x = r.sigma[x];
    } while (x != ha);
  }
  return r;
}

CombMap subdivide(const CombMap& m, int e) {
  auto [a, b] = edge_at(m, e);
  CombMap r = m;
  int c = m.halfedges(), d = c + 1;
  r.sigma.push_back(d);
  r.sigma.push_back(c);
  r.alpha.push_back(a);
  r.alpha.push_back(b);
  r.alpha[a] = c;
  r.alpha[b] = d;
  if (!r.twist.empty()) {
    char t = r.twist[a];
    r.twist.push_back(t);
    r.twist.push_back(0);
    r.twist[b] = 0;
  }
  if (!r.sign.empty()) {
    r.sign.push_back(1);
    r.sign.push_back(1);
  }
  return r;
}

CombMap unsubdivide(const CombMap& m, int v) {
  auto orbits = vertex_orbits(m);
  if (v < 0 || v >= static_cast<int>(orbits.size()) || orbits[v].size() != 2)
    throw MapError("unsubdivide needs a degree-2 vertex");
  int c = orbits[v][0], d = orbits[v][1];
  if (m.alpha[c] == d) throw MapError("unsubdivide: vertex carries a loop");
  int a = m.alpha[c], b = m.alpha[d];
  CombMap r = m;
  r.alpha[a] = b;
  r.alpha[b] = a;
  if (!r.twist.empty()) {
    char t = static_cast<char>(m.twist[c] ^ m.twist[d]);
    r.twist[a] = r.twist[b] = t;
  }
  std::vector<char> gone(m.halfedges(), 0);
  gone[c] = gone[d] = 1;
  return compact(r, gone, true);
}

CombMap relabel(const CombMap& m, const std::vector<int>& perm) {
  CombMap r = m;
  for (int h = 0; h < m.halfedges(); ++h) {
    r.sigma[perm[h]] = perm[m.sigma[h]];
    r.alpha[perm[h]] = perm[m.alpha[h]];
    if (!m.twist.empty()) r.twist[perm[h]] = m.twist[h];
    if (!m.sign.empty()) r.sign[perm[h]] = m.sign[h];
  }
  return r;
}

// ------------------------------------------------------------ canonical form

namespace {

std::vector<int> component_code(const CombMap& m, const std::vector<int>& comp) {
  std::vector<int> best;
  int n = m.halfedges();
  std::vector<int> label(n, -1), order;
  order.reserve(comp.size());
  for (int start : comp) {
    for (int h : order) label[h] = -1;
    order.clear();
    label[start] = 0;
    order.push_back(start);
    std::vector<int> code;
    code.reserve(comp.size() * 4);
    bool worse = false, better = best.empty();
    for (size_t i = 0; i < order.size(); ++i) {
      int h = order[i];
      for (int nb : {m.sigma[h], m.alpha[h]})
        if (label[nb] < 0) {
          label[nb] = static_cast<int>(order.size());
          order.push_back(nb);
        }
      int vals[4] = {label[m.sigma[h]], label[m.alpha[h]], m.twisted(h) ? 1 : 0,
                     m.sign.empty() ? 0 : m.sign[h]};
      for (int x : vals) {
        if (!better) {
          size_t pos = code.size();
          if (x < best[pos]) better = true;
          else if (x > best[pos]) {
            worse = true;
            break;
          }
        }
        code.push_back(x);
      }
      if (worse) break;
    }
    if (!worse && better) best = std::move(code);
  }
  return best;
}

}  // namespace

std::vector<int> canonical_code(const CombMap& m) {
  int n = m.halfedges();
  UnionFind uf(n);
  for (int h = 0; h < n; ++h) {
    uf.unite(h, m.sigma[h]);
    uf.unite(h, m.alpha[h]);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> idx(n, -1);
  for (int h = 0; h < n; ++h) {
    int r = uf.find(h);
    if (idx[r] < 0) {
      idx[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[idx[r]].push_back(h);
  }
  std::vector<std::vector<int>> codes;
  for (auto& c : comps) codes.push_back(component_code(m, c));
  std::sort(codes.begin(), codes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<int> out{static_cast<int>(codes.size())};
  for (auto& c : codes) {
    out.push_back(static_cast<int>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
  std::vector<int> iso(m.iso.begin(), m.iso.end());
  if (!m.has_signs()) std::fill(iso.begin(), iso.end(), 1);
  std::sort(iso.begin(), iso.end());
  out.push_back(static_cast<int>(iso.size()));
  out.insert(out.end(), iso.begin(), iso.end());
  return out;
}

std::string canonical_key(const CombMap& m) {
  auto c = canonical_code(m);
  std::string s;
  s.reserve(c.size() * 2);
  for (int x : c) {
    // small ints; a fixed two-byte encoding keeps keys compact
    unsigned v = static_cast<unsigned>(x + 8);
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return s;
}

bool isomorphic(const CombMap& a, const CombMap& b) {
  if (a.halfedges() != b.halfedges() || a.isolated() != b.isolated()) return false;
  return canonical_code(a) == canonical_code(b);
}

void enumerate_rotation_variants(const CombMap& m,
                                 const std::function<void(const std::vector<int>&, const CombMap&)>& f) {
  auto orbits = vertex_orbits(m);
  std::vector<int> flippable;
  for (int v = 0; v < static_cast<int>(orbits.size()); ++v)
    if (orbits[v].size() >= 3) flippable.push_back(v);
  int k = static_cast<int>(flippable.size());
  if (k > 30) throw MapError("too many vertices to enumerate rotation variants");
  for (long mask = 0; mask < (1L << k); ++mask) {
    std::vector<int> W;
    CombMap r = m;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        W.push_back(flippable[i]);
        for (int h : orbits[flippable[i]]) r.sigma[m.sigma[h]] = h;
      }
    f(W, r);
  }
}

// ------------------------------------------------------------------ fixtures

namespace fixtures {

CombMap theta_p() { return make_map({{0, 2, 4}, {5, 3, 1}}, {{0, 1}, {2, 3}, {4, 5}}); }
CombMap theta_t() { return make_map({{0, 2, 4}, {1, 3, 5}}, {{0, 1}, {2, 3}, {4, 5}}); }
CombMap loop1() { return make_map({{0, 1}}, {{0, 1}}); }
CombMap bouquet2_int() { return make_map({{0, 2, 1, 3}}, {{0, 1}, {2, 3}}); }
CombMap bridge() { return make_map({{0}, {1}}, {{0, 1}}); }
CombMap point() { return make_map({}, {}, 1); }

CombMap cycle(int n) {
  std::vector<std::vector<int>> rot;
  std::vector<std::array<int, 2>> edges;
  for (int i = 0; i < n; ++i) {
    rot.push_back({2 * i, 2 * i + 1});
    edges.push_back({2 * i + 1, 2 * ((i + 1) % n)});
  }
  return make_map(rot, edges);
}

namespace {
// Rotation system of a straight-line drawing.
CombMap straight_line(const std::vector<std::array<double, 2>>& pts, const std::vector<std::array<int, 2>>& es) {
  std::vector<std::vector<std::pair<double, int>>> around(pts.size());
  std::vector<std::array<int, 2>> edges;
  for (size_t k = 0; k < es.size(); ++k) {
    int u = es[k][0], w = es[k][1];
    int hu = 2 * static_cast<int>(k), hw = hu + 1;
    around[u].push_back({std::atan2(pts[w][1] - pts[u][1], pts[w][0] - pts[u][0]), hu});
    around[w].push_back({std::atan2(pts[u][1] - pts[w][1], pts[u][0] - pts[w][0]), hw});
    edges.push_back({hu, hw});
  }
  std::vector<std::vector<int>> rot;
  for (auto& a : around) {
    std::sort(a.begin(), a.end());
    std::vector<int> r;
    for (auto& p : a) r.push_back(p.second);
    rot.push_back(r);
  }
  return make_map(rot, edges);
}
}  // namespace

CombMap k33_std() {
  std::vector<std::array<double, 2>> pts;
  for (int n = 1; n <= 3; ++n) pts.push_back({1.0, double(n)});
  for (int m = 1; m <= 3; ++m) pts.push_back({2.0, double(m)});
  std::vector<std::array<int, 2>> es;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) es.push_back({n, 3 + m});
  return straight_line(pts, es);
}

CombMap k4() {
  std::vector<std::array<double, 2>> pts{{0, 0}, {0, 2}, {-2, -1}, {2, -1}};
  return straight_line(pts, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

}  // namespace fixtures

}  // namespace vg
