#include "virtgraph/brauer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "virtgraph/parallel.hpp"

namespace vg {

BrauerMatching make_matching(int bottom, int top, const std::vector<std::array<int, 2>>& pairs) {
  BrauerMatching d{bottom, top, std::vector<int>(bottom + top, -1)};
  for (auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= bottom + top || b >= bottom + top || a == b) throw ArityError("bad matching point");
    d.pair[a] = b;
    d.pair[b] = a;
  }
  for (int p : d.pair)
    if (p < 0) throw ArityError("matching leaves a point unmatched");
  return d;
}

BrauerVector::BrauerVector(const BrauerMatching& d, const HalfLaurent& coeff) { add(d, coeff); }

void BrauerVector::add(const BrauerMatching& d, const HalfLaurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(d, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BrauerVector& BrauerVector::operator+=(const BrauerVector& o) {
  for (auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

BrauerVector& BrauerVector::operator-=(const BrauerVector& o) {
  for (auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

BrauerVector operator*(const HalfLaurent& s, const BrauerVector& v) {
  BrauerVector r;
  for (auto& [d, c] : v.terms_) r.add(d, s * c);
  return r;
}

namespace {

// Glue b (below) to a (above); returns the outer matching and the closed loop count.
std::pair<BrauerMatching, int> glue_pair(const BrauerMatching& a, const BrauerMatching& b) {
  if (b.top != a.bottom) throw ArityError("compose: arity mismatch");
  int bb = b.bottom, mid = b.top, at = a.top;
  int off = bb + mid;  // a's points start here
  int total = off + mid + at;
  auto partner = [&](int p) { return p < off ? b.pair[p] : off + a.pair[p - off]; };
  auto is_mid_b = [&](int p) { return p >= bb && p < off; };
  auto is_mid_a = [&](int p) { return p >= off && p < off + mid; };
  auto twin = [&](int p) { return is_mid_b(p) ? off + (p - bb) : bb + (p - off); };
  auto outer = [&](int p) { return p < bb ? p : bb + (p - off - mid); };
  BrauerMatching r{bb, at, std::vector<int>(bb + at, -1)};
  std::vector<char> seen(total, 0);
  for (int p = 0; p < total; ++p) {
    bool external = p < bb || p >= off + mid;
    if (!external || seen[p]) continue;
    int x = p;
    seen[x] = 1;
    int y = partner(x);
    while (is_mid_b(y) || is_mid_a(y)) {
      seen[y] = 1;
      int t = twin(y);
      seen[t] = 1;
      y = partner(t);
    }
    seen[y] = 1;
    r.pair[outer(p)] = outer(y);
    r.pair[outer(y)] = outer(p);
  }
  int loops = 0;
  for (int p = bb; p < off; ++p) {
    if (seen[p]) continue;
    ++loops;
    int x = p;
    do {
      seen[x] = 1;
      int t = twin(x);
      seen[t] = 1;
      x = partner(t);
    } while (x != p);
  }
  return {r, loops};
}

}  // namespace

BrauerVector compose(const BrauerVector& a, const BrauerVector& b) {
  BrauerVector r;
  for (auto& [da, ca] : a.terms())
    for (auto& [db, cb] : b.terms()) {
      auto [d, loops] = glue_pair(da, db);
      r.add(d, ca * cb * HalfLaurent::power_of(Var::c, loops));
    }
  return r;
}

BrauerVector tensor(const BrauerVector& a, const BrauerVector& b) {
  BrauerVector r;
  for (auto& [da, ca] : a.terms())
    for (auto& [db, cb] : b.terms()) {
      int ab = da.bottom, at = da.top, bb = db.bottom, bt = db.top;
      BrauerMatching d{ab + bb, at + bt, std::vector<int>(ab + bb + at + bt)};
      // new labels: a bottom, b bottom, a top, b top
      auto la = [&](int p) { return p < ab ? p : ab + bb + (p - ab); };
      auto lb = [&](int p) { return p < bb ? ab + p : ab + bb + at + (p - bb); };
      for (int p = 0; p < ab + at; ++p) d.pair[la(p)] = la(da.pair[p]);
      for (int p = 0; p < bb + bt; ++p) d.pair[lb(p)] = lb(db.pair[p]);
      r.add(d, ca * cb);
    }
  return r;
}

HalfLaurent close_trace(const BrauerVector& a) {
  HalfLaurent r(Var::c);
  for (auto& [d, c] : a.terms()) {
    if (d.bottom != d.top) throw ArityError("trace needs equal arity");
    int n = d.bottom;
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int p = 0; p < 2 * n; ++p) {
      if (seen[p]) continue;
      ++loops;
      int x = p;
      while (!seen[x]) {
        seen[x] = 1;
        int y = d.pair[x];
        seen[y] = 1;
        x = y < n ? y + n : y - n;  // closing strand
      }
    }
    r += c * HalfLaurent::power_of(Var::c, loops);
  }
  return r;
}

namespace diagrams {
BrauerVector id(int n) {
  std::vector<std::array<int, 2>> p;
  for (int i = 0; i < n; ++i) p.push_back({i, n + i});
  return BrauerVector(make_matching(n, n, p));
}
BrauerVector cup() { return BrauerVector(make_matching(0, 2, {{0, 1}})); }
BrauerVector cap() { return BrauerVector(make_matching(2, 0, {{0, 1}})); }
BrauerVector e() { return BrauerVector(make_matching(2, 2, {{0, 1}, {2, 3}})); }
BrauerVector x() { return BrauerVector(make_matching(2, 2, {{0, 3}, {1, 2}})); }
BrauerVector jones_wenzl2() { return id(2) - HalfLaurent::power_of(Var::c, -1) * e(); }
}  // namespace diagrams

CheckReport br2_idempotent_verify() {
  using namespace diagrams;
  HalfLaurent inv = HalfLaurent::power_of(Var::c, -1), half = HalfLaurent::constant(Var::c, Rational(1, 2));
  BrauerVector p1 = inv * e();
  BrauerVector p2 = half * id(2) - half * x();
  BrauerVector p3 = half * id(2) - inv * e() + half * x();
  BrauerVector ps[3] = {p1, p2, p3};
  CheckReport r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto prod = compose(ps[i], ps[j]);
      std::string name = "p" + std::to_string(i + 1) + " p" + std::to_string(j + 1);
      r.add(name + (i == j ? " = p" + std::to_string(i + 1) : " = 0"), i == j ? prod == ps[i] : prod.is_zero());
    }
  r.add("p1 + p2 + p3 = id", p1 + p2 + p3 == id(2));
  BrauerVector jw = jones_wenzl2();
  r.add("P2 = p2 + p3", jw == p2 + p3);
  r.add("P2 P2 = P2", compose(jw, jw) == jw);
  r.add("P2 cup = 0", compose(jw, cup()).is_zero());
  r.add("cap P2 = 0", compose(cap(), jw).is_zero());
  r.add("x x = id", compose(x(), x()) == id(2));
  r.add("cap cup = c", close_trace(compose(cap(), cup())) == HalfLaurent::power_of(Var::c, 1));
  BrauerVector zig = compose(tensor(cap(), id(1)), tensor(id(1), cup()));
  r.add("zig-zag = id", zig == id(1));
  return r;
}

// ------------------------------------------------------------------ Phi

HalfLaurent phi_evaluate(const CombMap& m) {
  require_valid(m);
  if (m.any_twist()) throw MapError("phi functor is defined on untwisted maps");
  int n = m.halfedges();
  auto el = edge_list(m);
  int E = static_cast<int>(el.size());
  int V = vertex_count(m);
  // strand ends L(h) = 2h, R(h) = 2h + 1; the vertex cup pattern joins L(h) with R(sigma h)
  long total = 1L << E;
  int chunks = E >= 14 ? 64 : 1;
  std::function<std::map<long, long long>(long, long)> body = [&](long b, long e) {
    std::map<long, long long> acc;
    std::vector<int> parent(2 * n);
    std::function<int(int)> find = [&](int x) {
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
      for (int h = 0; h < n; ++h) unite(2 * h, 2 * m.sigma[h] + 1);
      int e_count = 0;
      for (int k = 0; k < E; ++k) {
        int a = el[k][0], c = el[k][1];
        if (s >> k & 1) {  // cap-cup, weight -1
          unite(2 * a, 2 * a + 1);
          unite(2 * c, 2 * c + 1);
          ++e_count;
        } else {  // identity, weight Q^{1/2}
          unite(2 * a, 2 * c + 1);
          unite(2 * a + 1, 2 * c);
        }
      }
      int loops = comps + m.isolated();
      long half = loops + (E - e_count) - V;  // Q^{1/2} per loop and per identity edge, Q^{-1/2} per vertex
      acc[half] += (e_count % 2) ? -1 : 1;
    }
    return acc;
  };
  auto parts = parallel_chunks<std::map<long, long long>>(total, chunks, body);
  HalfLaurent r(Var::Q);
  for (auto& p : parts)
    for (auto& [k, v] : p) r.add_term(k, Rational(static_cast<long>(v)));
  return r;
}

// -------------------------------------------------------------- Gramians

std::vector<std::vector<int>> fpf_basis(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      if (p[i] == i) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CombMap glue(const std::vector<int>& sigma, const std::vector<int>& tau) {
  if (sigma.size() != tau.size()) throw ArityError("glue: boundary sizes differ");
  int n = static_cast<int>(sigma.size());
  CombMap m;
  m.sigma.resize(2 * n);
  m.alpha.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] == i || tau[i] == i) throw ArityError("glue: permutations must be fixed-point-free");
    m.sigma[i] = sigma[i];
    m.sigma[n + tau[i]] = n + i;  // rotation of tau read backwards on the facing side
    m.alpha[i] = n + i;
    m.alpha[n + i] = i;
  }
  return m;
}

HalfLaurent glue_pairing(const std::vector<int>& sigma, const std::vector<int>& tau) { return s_poly(glue(sigma, tau)); }

std::vector<std::vector<HalfLaurent>> gram_matrix(int n) {
  auto basis = fpf_basis(n);
  size_t k = basis.size();
  std::vector<std::vector<HalfLaurent>> g(k, std::vector<HalfLaurent>(k, HalfLaurent(Var::Q)));
  std::function<int(long, long)> body = [&](long b, long e) {
    for (long idx = b; idx < e; ++idx) {
      size_t i = idx / k, j = idx % k;
      if (j < i) continue;
      g[i][j] = glue_pairing(basis[i], basis[j]);
    }
    return 0;
  };
  parallel_chunks<int>(static_cast<long>(k * k), std::min<long>(64, k * k), body);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < i; ++j) g[i][j] = g[j][i];
  return g;
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

Integer eval_int(const HalfLaurent& p, long x) {
  Rational v = p.eval(Rational(x));
  if (v.get_den() != 1) throw std::logic_error("Gramian entry is not integral");
  return v.get_num();
}

// Newton interpolation through (i, y_i), i = 0..d, converted to monomial form.
HalfLaurent interpolate(const std::vector<Integer>& ys) {
  size_t d = ys.size();
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (size_t j = 1; j < d; ++j)
    for (size_t i = d - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  // p(x) = sum coef[j] prod_{i<j} (x - i); Horner from the top
  std::vector<Rational> poly{coef[d - 1]};
  for (size_t jj = d - 1; jj-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * Rational(static_cast<long>(jj));
    }
    next[0] += coef[jj];
    poly = std::move(next);
  }
  HalfLaurent r(Var::Q);
  for (size_t k = 0; k < poly.size(); ++k) r.add_term(2 * static_cast<long>(k), poly[k]);
  return r;
}

}  // namespace

HalfLaurent gram_det(int n, bool allow_long) {
  if (n < 2 || n > 6) throw std::out_of_range("gram_det supports 2 <= n <= 6");
  if (n == 6 && !allow_long) throw std::runtime_error("gram_det(6) is long-running; pass allow_long");
  auto g = gram_matrix(n);
  size_t k = g.size();
  long deg = 0;
  for (auto& row : g) {
    long best = 0;
    for (auto& p : row)
      if (!p.is_zero()) best = std::max(best, p.max_half_exp() / 2);
    deg += best;
  }
  long points = deg + 2;  // one extra point as a consistency check
  std::function<std::vector<Integer>(long, long)> body = [&](long b, long e) {
    std::vector<Integer> out;
    for (long x = b; x < e; ++x) {
      std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) a[i][j] = eval_int(g[i][j], x);
      out.push_back(bareiss_det(std::move(a)));
    }
    return out;
  };
  auto parts = parallel_chunks<std::vector<Integer>>(points, static_cast<int>(std::min<long>(points, 64)), body);
  std::vector<Integer> ys;
  for (auto& p : parts) ys.insert(ys.end(), p.begin(), p.end());
  Integer check = ys.back();
  ys.pop_back();
  HalfLaurent det = interpolate(ys);
  if (det.eval(Rational(static_cast<long>(ys.size()))) != Rational(check))
    throw std::logic_error("gram_det: interpolation check failed");
  return det;
}

// ------------------------------------------------------ symmetrized pairs

std::vector<std::vector<int>> partitions_min2(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 2; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<int> t;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t x = i; !seen[x]; x = p[x]) {
      seen[x] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<int> standard_fpf(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> p(n);
  int start = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
    start += len;
  }
  return p;
}

}  // namespace

Rational sym_pairing(const std::vector<int>& lambda, const std::vector<int>& mu, const Rational& Q) {
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (std::accumulate(mu.begin(), mu.end(), 0) != n) throw ArityError("partitions of different sizes");
  for (int p : lambda)
    if (p < 2) throw ArityError("partition parts must be at least 2");
  for (int p : mu)
    if (p < 2) throw ArityError("partition parts must be at least 2");
  std::vector<int> target = mu;
  std::sort(target.rbegin(), target.rend());
  auto s0 = standard_fpf(lambda);
  Rational sum = 0;
  long count = 0;
  for (auto& tau : fpf_basis(n)) {
    if (cycle_type(tau) != target) continue;
    sum += glue_pairing(s0, tau).eval(Q);
    ++count;
  }
  return sum / Rational(count);
}

bool sym_negligible_verify(long Q, const std::vector<SymTerm>& candidate) {
  long k = std::lround(std::sqrt(static_cast<double>(Q)));
  if (k * k != Q || k < 1) throw ArityError("Q must be a perfect square");
  int n = static_cast<int>(k + 1);
  for (auto& t : candidate)
    if (std::accumulate(t.parts.begin(), t.parts.end(), 0) != n) throw ArityError("partition does not sum to sqrt(Q)+1");
  for (auto& mu : partitions_min2(n)) {
    Rational total = 0;
    for (auto& t : candidate) total += t.coeff * sym_pairing(t.parts, mu, Rational(Q));
    if (total != 0) return false;
  }
  return true;
}

std::vector<SymTerm> negligible_table_row(long Q) {
  auto R = [](long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
  };
  switch (Q) {
    case 1: return {{1, {2}}};
    case 4: return {{1, {3}}};
    case 9: return {{1, {4}}, {R(-3, 2), {2, 2}}};
    case 16: return {{1, {5}}, {R(-10, 3), {3, 2}}};
    case 25: return {{1, {6}}, {R(-15, 4), {4, 2}}, {R(-5, 3), {3, 3}}, {R(25, 8), {2, 2, 2}}};
    case 36: return {{1, {7}}, {R(-21, 5), {5, 2}}, {R(-7, 2), {4, 3}}, {R(21, 2), {3, 2, 2}}};
    case 49:
      return {{1, {8}},          {R(-14, 3), {6, 2}},   {R(-56, 15), {5, 3}},     {R(-7, 4), {4, 4}},
              {R(49, 4), {4, 2, 2}}, {R(98, 9), {3, 3, 2}}, {R(-343, 48), {2, 2, 2, 2}}};
  }
  throw std::out_of_range("no tabulated negligible element at this Q");
}

}  // namespace vg
