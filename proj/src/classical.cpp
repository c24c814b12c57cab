#include "virtgraph/classical.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "virtgraph/brauer.hpp"
#include "virtgraph/parallel.hpp"

namespace vg {

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::StateSum: return "state-sum";
    case Engine::ContractionDeletion: return "contraction-deletion";
    case Engine::Brauer: return "brauer-functor";
  }
  return "?";
}

namespace {

struct SubStats {
  int kept = 0;   // edges kept
  int faces = 0;  // including vertices left bare
  int b0 = 0;     // including vertices left bare
};

// Statistics of the spanning submap of an untwisted map keeping the edges flagged in kept
// (indexed like edge_list).
class SubmapCounter {
 public:
  explicit SubmapCounter(const CombMap& m) : m_(m) {
    n_ = m.halfedges();
    edge_of_.resize(n_);
    auto el = edge_list(m);
    for (size_t k = 0; k < el.size(); ++k) edge_of_[el[k][0]] = edge_of_[el[k][1]] = static_cast<int>(k);
    vof_ = vertex_of_halfedge(m);
    nv_ = n_ ? *std::max_element(vof_.begin(), vof_.end()) + 1 : 0;
    sig_.resize(n_);
    seen_.resize(n_);
    vseen_.resize(nv_);
    parent_.resize(nv_);
  }

  int vertices() const { return nv_ + m_.isolated(); }

  SubStats run(const std::vector<char>& kept, bool want_faces, bool want_b0) {
    SubStats s;
    for (size_t k = 0; k < kept.size(); ++k) s.kept += kept[k] ? 1 : 0;
    if (want_faces) {
      for (int h = 0; h < n_; ++h) {
        if (!kept[edge_of_[h]]) continue;
        int x = m_.sigma[h];
        while (!kept[edge_of_[x]]) x = m_.sigma[x];
        sig_[h] = x;
      }
      std::fill(seen_.begin(), seen_.end(), 0);
      std::fill(vseen_.begin(), vseen_.end(), 0);
      for (int h = 0; h < n_; ++h) {
        if (!kept[edge_of_[h]]) continue;
        vseen_[vof_[h]] = 1;
        if (seen_[h]) continue;
        ++s.faces;
        int x = h;
        do {
          seen_[x] = 1;
          x = sig_[m_.alpha[x]];
        } while (x != h);
      }
      for (int v = 0; v < nv_; ++v)
        if (!vseen_[v]) ++s.faces;
      s.faces += m_.isolated();
    }
    if (want_b0) {
      std::iota(parent_.begin(), parent_.end(), 0);
      int comps = nv_;
      for (int h = 0; h < n_; ++h) {
        if (!kept[edge_of_[h]] || h > m_.alpha[h]) continue;
        int a = find(vof_[h]), b = find(vof_[m_.alpha[h]]);
        if (a != b) {
          parent_[a] = b;
          --comps;
        }
      }
      s.b0 = comps + m_.isolated();
    }
    return s;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  const CombMap& m_;
  int n_ = 0, nv_ = 0;
  std::vector<int> edge_of_, vof_, sig_, parent_;
  std::vector<char> seen_, vseen_;
};

void require_untwisted(const CombMap& m, const char* what) {
  require_valid(m);
  if (m.any_twist())
    throw MapError(std::string(what) + " is undefined on twisted maps; use the Penrose polynomials instead");
}

// Sum over subsets of exponent counts, optionally in parallel.
std::map<long, long long> subset_sum(const CombMap& m, bool s_variant) {
  int E = m.edge_count();
  long total = 1L << E;
  int chunks = E >= 14 ? 64 : 1;
  std::function<std::map<long, long long>(long, long)> body = [&](long b, long e) {
    SubmapCounter counter(m);
    long V = counter.vertices();
    std::vector<char> kept(E);
    std::map<long, long long> acc;
    for (long i = b; i < e; ++i) {
      long g = i ^ (i >> 1);  // Gray order; each state is recomputed from scratch
      int deleted = 0;
      for (int k = 0; k < E; ++k) {
        kept[k] = (g >> k & 1) ? 0 : 1;
        deleted += 1 - kept[k];
      }
      auto st = counter.run(kept, s_variant, !s_variant);
      long ex = s_variant ? st.kept - V + st.faces : 2L * (st.kept - V + st.b0);
      acc[ex] += (deleted % 2) ? -1 : 1;
    }
    return acc;
  };
  auto parts = parallel_chunks<std::map<long, long long>>(total, chunks, body);
  std::map<long, long long> all;
  for (auto& p : parts)
    for (auto& [k, v] : p) all[k] += v;
  return all;
}

HalfLaurent from_counts(const std::map<long, long long>& c) {
  HalfLaurent p(Var::Q);
  for (auto& [e, k] : c)
    if (k) p.add_term(e, Rational(static_cast<long>(k)));
  return p;
}

CombMap strip_isolated(const CombMap& m) {
  if (m.iso.empty() && m.sign.empty()) return m;
  CombMap r = m;
  r.iso.clear();
  r.sign.clear();
  return r;
}

int first_nonloop(const CombMap& m) {
  auto vof = vertex_of_halfedge(m);
  auto el = edge_list(m);
  for (size_t k = 0; k < el.size(); ++k)
    if (vof[el[k][0]] != vof[el[k][1]]) return static_cast<int>(k);
  return -1;
}

thread_local std::unordered_map<std::string, HalfLaurent> s_memo, f_memo, lambda_memo;

// Both S and F vanish on a pendant edge and are unchanged by contracting an edge at a
// degree-2 vertex. Returns false when the value is zero.
bool shed_low_degree(CombMap& m) {
  for (;;) {
    bool changed = false;
    for (auto& o : vertex_orbits(m)) {
      if (o.size() == 1) return false;
      if (o.size() == 2 && m.alpha[o[0]] != o[1]) {
        m = contract(m, edge_index(m, o[0]));
        changed = true;
        break;
      }
    }
    if (!changed) return true;
  }
}

HalfLaurent s_cd(const CombMap& m0) {
  CombMap m = strip_isolated(m0);
  if (!shed_low_degree(m)) return HalfLaurent(Var::Q);
  m = strip_isolated(m);
  if (m.edge_count() == 0) return HalfLaurent::constant(Var::Q, 1);
  auto key = canonical_key(m);
  if (auto it = s_memo.find(key); it != s_memo.end()) return it->second;
  int e = first_nonloop(m);
  HalfLaurent r(Var::Q);
  if (e >= 0) {
    r = s_cd(contract(m, e)) - s_cd(delete_edge(m, e));
  } else {
    r = HalfLaurent::power_of(Var::Q, 1) * s_cd(contract(m, 0)) - s_cd(delete_edge(m, 0));
  }
  s_memo.emplace(std::move(key), r);
  return r;
}

HalfLaurent f_cd(const CombMap& m0) {
  CombMap m = strip_isolated(m0);
  if (!shed_low_degree(m)) return HalfLaurent(Var::Q);
  m = strip_isolated(m);
  if (m.edge_count() == 0) return HalfLaurent::constant(Var::Q, 1);
  auto key = canonical_key(m);
  if (auto it = f_memo.find(key); it != f_memo.end()) return it->second;
  int e = first_nonloop(m);
  HalfLaurent r(Var::Q);
  if (e >= 0) r = f_cd(contract(m, e)) - f_cd(delete_edge(m, e));
  else r = HalfLaurent::linear(Var::Q, 1, -1) * f_cd(delete_edge(m, 0));
  f_memo.emplace(std::move(key), r);
  return r;
}

HalfLaurent lambda_rec(const CombMap& m0) {
  CombMap m = m0;
  m.sign.clear();
  std::fill(m.iso.begin(), m.iso.end(), 1);
  if (m.edge_count() == 0) return HalfLaurent::power_of(Var::t, vertex_count(m));
  auto key = canonical_key(m);
  if (auto it = lambda_memo.find(key); it != lambda_memo.end()) return it->second;
  int e = first_nonloop(m);
  HalfLaurent r(Var::t);
  if (e >= 0) r = lambda_rec(delete_edge(m, e)) - lambda_rec(contract(m, e));
  else r = lambda_rec(delete_edge(m, 0)) - HalfLaurent::power_of(Var::t, -1) * lambda_rec(contract(m, 0));
  lambda_memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

void clear_memo() {
  s_memo.clear();
  f_memo.clear();
  lambda_memo.clear();
}

long s_exponent_half(const CombMap& m, const std::vector<char>& kept) {
  SubmapCounter c(m);
  auto st = c.run(kept, true, false);
  return st.kept - c.vertices() + st.faces;
}

HalfLaurent flow_poly(const CombMap& m, Engine engine) {
  require_valid(m);
  switch (engine) {
    case Engine::StateSum: return from_counts(subset_sum(m, false));
    case Engine::ContractionDeletion: {
      CombMap u = m;
      u.twist.clear();  // flow ignores rotation data
      return f_cd(u);
    }
    case Engine::Brauer: throw std::invalid_argument("flow polynomial has no Brauer engine");
  }
  return HalfLaurent(Var::Q);
}

HalfLaurent s_poly(const CombMap& m, Engine engine) {
  require_untwisted(m, "S-polynomial");
  switch (engine) {
    case Engine::StateSum: return from_counts(subset_sum(m, true));
    case Engine::ContractionDeletion: return s_cd(m);
    case Engine::Brauer: return phi_evaluate(m);
  }
  return HalfLaurent(Var::Q);
}

KrushkalPoly krushkal_poly(const CombMap& m) {
  require_untwisted(m, "Krushkal polynomial");
  int E = m.edge_count();
  CombMap dual = geometric_dual(m);
  SubmapCounter cg(m), cd(dual);
  long V = cg.vertices(), Vd = cd.vertices();
  std::vector<char> all(E, 1);
  int b0 = cg.run(all, false, true).b0;
  KrushkalPoly p;
  std::vector<char> kept(E), dk(E);
  for (long mask = 0; mask < (1L << E); ++mask) {
    for (int k = 0; k < E; ++k) {
      dk[k] = mask >> k & 1;  // T, the deleted edges
      kept[k] = 1 - dk[k];
    }
    auto h = cg.run(kept, true, true);
    auto d = cd.run(dk, true, true);
    int x = h.b0 - b0;
    int y = static_cast<int>(h.kept - V + h.b0);
    int a = static_cast<int>(2 * h.b0 + h.kept - V - h.faces);
    int b = static_cast<int>(2 * d.b0 + d.kept - Vd - d.faces);
    p.add_term({x, y, a, b}, 1);
  }
  return p;
}

HalfLaurent specialize_krushkal_to_s(const KrushkalPoly& p, int b1) {
  HalfLaurent s(Var::Q);
  for (auto& [k, c] : p.terms()) {
    int sign = ((k[0] + k[1] + b1) % 2) ? -1 : 1;
    s.add_term(2L * k[1] - k[2], c * sign);
  }
  return s;
}

HalfLaurent virtual_chromatic(const CombMap& m) {
  require_untwisted(m, "virtual chromatic polynomial");
  return lambda_rec(m);
}

HalfLaurent virtual_chromatic_via_dual(const CombMap& m) {
  require_untwisted(m, "virtual chromatic polynomial");
  auto ed = euler_data(m);
  HalfLaurent s = s_poly(geometric_dual(m));
  return s.shifted(2L * (ed.b0 - ed.genus)).retagged(Var::t);
}

DegreeReport degree_report(const CombMap& m) {
  require_untwisted(m, "degree report");
  DegreeReport r;
  auto ed = euler_data(m);
  r.bound = ed.b1 - ed.genus;
  r.s = s_poly(m);
  r.has_coloop = !coloops(m).empty();
  auto d = degree_leading(r.s);
  r.attained = !d.minus_infinity && d.half_exp == 2 * r.bound;
  r.monic = r.attained && d.coeff == 1;
  r.i_poly = r.s.reflected().shifted(2 * r.bound).retagged(Var::t);
  return r;
}

bool CheckReport::ok() const {
  for (auto& l : lines)
    if (!l.ok) return false;
  return true;
}

void CheckReport::add(const std::string& name, const HalfLaurent& lhs, const HalfLaurent& rhs) {
  lines.push_back({name, lhs.str(), rhs.str(), lhs == rhs});
}

void CheckReport::add(const std::string& name, const Rational& lhs, const Rational& rhs) {
  lines.push_back({name, to_string(lhs), to_string(rhs), lhs == rhs});
}

void CheckReport::add(const std::string& name, bool ok, const std::string& detail) {
  lines.push_back({name, detail, "", ok});
}

void CheckReport::append(const CheckReport& o) { lines.insert(lines.end(), o.lines.begin(), o.lines.end()); }

std::string CheckReport::str() const {
  std::ostringstream os;
  for (auto& l : lines) {
    os << (l.ok ? "ok   " : "FAIL ") << l.name;
    if (!l.lhs.empty() || !l.rhs.empty()) os << ": " << l.lhs;
    if (!l.rhs.empty()) os << " | " << l.rhs;
    os << "\n";
  }
  return os.str();
}

namespace {
int first_trivalent_halfedge(const CombMap& m) {
  for (auto& o : vertex_orbits(m)) {
    if (o.size() != 3) continue;
    bool loop = false;
    for (int h : o)
      if (std::find(o.begin(), o.end(), m.alpha[h]) != o.end()) loop = true;
    if (!loop) return o[0];
  }
  return -1;
}
}  // namespace

CheckReport connect_sum_checks(const CombMap& a, const CombMap& b) {
  require_untwisted(a, "connect sum");
  require_untwisted(b, "connect sum");
  CheckReport r;
  HalfLaurent sa = s_poly(a), sb = s_poly(b);
  HalfLaurent q1 = HalfLaurent::linear(Var::Q, 1, -1);
  if (a.edge_count() && b.edge_count()) {
    for (bool rev : {false, true}) {
      auto sum = edge_connect_sum(a, 0, b, 0, rev);
      r.add(std::string("(Q-1) S(#2) = S S") + (rev ? " [reversed]" : ""), q1 * s_poly(sum), sa * sb);
    }
  }
  auto u = disjoint_union(a, b);
  r.add("S(union) = S S", s_poly(u), sa * sb);
  r.add("F(union) = F F", flow_poly(u), flow_poly(a) * flow_poly(b));
  if (a.halfedges() && b.halfedges()) r.add("S(union) = S(wedge)", s_poly(u), s_poly(wedge(a, 0, b, 0)));
  int ha = first_trivalent_halfedge(a), hb = first_trivalent_halfedge(b);
  if (ha >= 0 && hb >= 0) {
    int va = vertex_of_halfedge(a)[ha], vb = vertex_of_halfedge(b)[hb];
    CombMap bf = vertex_flip(b, vb), af = vertex_flip(a, va);
    // the flip keeps labels, so hb still sits on the flipped vertex
    HalfLaurent lhs = product_of_linear(Var::Q, {{1, 1}, {2, 1}}) * s_poly(vertex_connect_sum(a, ha, bf, hb)) -
                      Rational(2) * q1 * s_poly(vertex_connect_sum(a, ha, b, hb));
    HalfLaurent rhs = sa * s_poly(bf) + s_poly(af) * sb;
    r.add("vertex connect sum identity", lhs, rhs);
  }
  return r;
}

CheckReport special_value_checks(const CombMap& m) {
  require_untwisted(m, "special values");
  CheckReport r;
  HalfLaurent s = s_poly(m), f = flow_poly(m);
  if (m.edge_count() > 0) r.add("S(1) = 0", s.eval(1), Rational(0));
  r.add("S(0) = F(0)", s.eval(0), f.eval(0));
  bool bridge = has_bridge(m);
  r.add("bridge <=> S = 0", bridge == s.is_zero(), bridge ? "bridge" : "no bridge");
  r.add("S = 0 <=> S(0) = 0", s.is_zero() == (s.eval(0) == 0));
  auto orbits = vertex_orbits(m);
  Rational s4 = s.eval(4);
  for (size_t v = 0; v < orbits.size(); ++v) {
    Rational flipped = s_poly(vertex_flip(m, static_cast<int>(v))).eval(4);
    Rational expect = orbits[v].size() % 2 ? -s4 : s4;
    r.add("S_{flip v" + std::to_string(v) + "}(4) = (-1)^deg S(4)", flipped, expect);
  }
  auto d = degree_report(m);
  r.add("deg S <= b1 - g", d.s.is_zero() || degree_leading(d.s).half_exp <= 2 * d.bound);
  if (!d.has_coloop) r.add("coloop-free: degree attained and monic", d.attained && d.monic);
  return r;
}

int g_min(const CombMap& m) {
  int best = -1;
  enumerate_rotation_variants(m, [&](const std::vector<int>&, const CombMap& v) {
    int g = euler_data(v).genus;
    if (best < 0 || g < best) best = g;
  });
  return best;
}

}  // namespace vg
