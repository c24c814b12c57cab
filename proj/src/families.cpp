#include "virtgraph/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace vg {

namespace {

void insert_after(std::vector<int>& sigma, int h, int x) {
  int nx = sigma[h];
  sigma[h] = x;
  sigma[x] = nx;
}

}  // namespace

std::vector<CombMap> connected_maps(int max_edges) {
  std::vector<CombMap> out;
  if (max_edges < 1) return out;
  std::vector<CombMap> level{fixtures::bridge(), fixtures::loop1()};
  for (int k = 1; k <= max_edges; ++k) {
    for (auto& m : level) out.push_back(m);
    if (k == max_edges) break;
    std::map<std::vector<int>, CombMap> next;
    auto add = [&](CombMap&& m) {
      auto code = canonical_code(m);
      next.try_emplace(std::move(code), std::move(m));
    };
    for (auto& m : level) {
      int n = m.halfedges(), x = n, y = n + 1;
      for (int h1 = 0; h1 < n; ++h1) {
        CombMap base = m;
        base.sigma.push_back(x);
        base.sigma.push_back(y);
        base.alpha.push_back(y);
        base.alpha.push_back(x);
        insert_after(base.sigma, h1, x);
        add(CombMap(base));  // pendant edge: y is its own vertex
        for (int h2 = 0; h2 <= n; ++h2) {
          CombMap c = base;
          insert_after(c.sigma, h2, y);
          add(std::move(c));
        }
      }
    }
    level.clear();
    for (auto& [code, m] : next) level.push_back(std::move(m));
  }
  return out;
}

CombMap random_map(std::mt19937_64& rng, int edges) {
  int n = 2 * edges;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  CombMap m;
  m.sigma = perm;
  m.alpha.resize(n);
  for (int h = 0; h < n; ++h) m.alpha[h] = h ^ 1;
  return m;
}

// ------------------------------------------------------------- multigraphs

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const Multigraph& g) {
  Matrix a(g.n, std::vector<int>(g.n, 0));
  for (auto& e : g.edges) {
    if (e[0] == e[1]) a[e[0]][e[0]]++;
    else {
      a[e[0]][e[1]]++;
      a[e[1]][e[0]]++;
    }
  }
  return a;
}

std::vector<int> refine(const Matrix& a, std::vector<int> color) {
  int n = static_cast<int>(a.size());
  int classes = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v], a[v][v]};
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && a[v][u]) nb.push_back({color[u], a[v][u]});
      std::sort(nb.begin(), nb.end());
      for (auto& [c, k] : nb) {
        s.push_back(c);
        s.push_back(k);
      }
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> nc(n);
    for (int v = 0; v < n; ++v)
      nc[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    int nclasses = static_cast<int>(keys.size());
    color = std::move(nc);
    if (nclasses == classes) return color;
    classes = nclasses;
  }
}

void search(const Matrix& a, std::vector<int> color, std::vector<int>& best) {
  color = refine(a, color);
  int n = static_cast<int>(a.size());
  std::vector<int> count(n, 0);
  for (int c : color) count[c]++;
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[color[v]] = v;
    std::vector<int> code;
    code.reserve(n * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) code.push_back(a[inv[i]][inv[j]]);
    if (best.empty() || code < best) best = std::move(code);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> c2(n);
    for (int u = 0; u < n; ++u) c2[u] = 2 * color[u] + 1;
    c2[v] = 2 * color[v];
    search(a, c2, best);
  }
}

}  // namespace

std::vector<int> graph_canonical_code(const Multigraph& g) {
  std::vector<int> best;
  if (g.n == 0) return {0};
  search(adjacency(g), std::vector<int>(g.n, 0), best);
  best.insert(best.begin(), g.n);
  return best;
}

static bool connected_without(const Multigraph& g, int skip) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  int comps = g.n;
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    if (k == skip) continue;
    int a = find(g.edges[k][0]), b = find(g.edges[k][1]);
    if (a != b) {
      p[a] = b;
      --comps;
    }
  }
  return comps <= 1;
}

bool graph_connected(const Multigraph& g) { return connected_without(g, -1); }

bool graph_has_bridge(const Multigraph& g) {
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k)
    if (g.edges[k][0] != g.edges[k][1] && !connected_without(g, k)) return true;
  return false;
}

std::vector<Multigraph> cubic_graphs(const CubicOptions& opt) {
  // Closed family: connected cubic multigraphs with loops, grown two vertices at a time
  // by joining two subdivision points or by hanging a looped vertex off a subdivision point.
  std::vector<Multigraph> level;
  level.push_back({2, {{0, 1}, {0, 1}, {0, 1}}});
  level.push_back({2, {{0, 0}, {0, 1}, {1, 1}}});
  std::vector<Multigraph> out;
  auto keep = [&](const Multigraph& g) {
    bool loops = false, multi = false;
    std::set<std::pair<int, int>> seen;
    for (auto& e : g.edges) {
      if (e[0] == e[1]) loops = true;
      else if (!seen.insert({std::min(e[0], e[1]), std::max(e[0], e[1])}).second) multi = true;
    }
    if (loops && !opt.allow_loops) return false;
    if (multi && !opt.allow_multi) return false;
    if (opt.bridgeless && graph_has_bridge(g)) return false;
    return true;
  };
  for (int n = 2; n <= opt.max_vertices; n += 2) {
    for (auto& g : level)
      if (keep(g)) out.push_back(g);
    if (n + 2 > opt.max_vertices) break;
    std::map<std::vector<int>, Multigraph> next;
    auto add = [&](Multigraph&& g) {
      auto code = graph_canonical_code(g);
      next.try_emplace(std::move(code), std::move(g));
    };
    for (auto& g : level) {
      int m = static_cast<int>(g.edges.size());
      int u = n, v = n + 1;
      for (int e1 = 0; e1 < m; ++e1) {
        for (int e2 = e1; e2 < m; ++e2) {
          Multigraph h{n + 2, {}};
          for (int k = 0; k < m; ++k)
            if (k != e1 && k != e2) h.edges.push_back(g.edges[k]);
          auto [a, b] = g.edges[e1];
          if (e1 == e2) {
            h.edges.push_back({a, u});
            h.edges.push_back({u, v});
            h.edges.push_back({v, b});
          } else {
            auto [c, d] = g.edges[e2];
            h.edges.push_back({a, u});
            h.edges.push_back({u, b});
            h.edges.push_back({c, v});
            h.edges.push_back({v, d});
          }
          h.edges.push_back({u, v});
          add(std::move(h));
        }
        Multigraph h{n + 2, {}};
        for (int k = 0; k < m; ++k)
          if (k != e1) h.edges.push_back(g.edges[k]);
        h.edges.push_back({g.edges[e1][0], u});
        h.edges.push_back({u, g.edges[e1][1]});
        h.edges.push_back({u, v});
        h.edges.push_back({v, v});
        add(std::move(h));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return out;
}

CombMap map_from_graph(const Multigraph& g) {
  std::vector<std::vector<int>> rot(g.n);
  std::vector<std::array<int, 2>> edges;
  for (size_t k = 0; k < g.edges.size(); ++k) {
    int h = 2 * static_cast<int>(k);
    rot[g.edges[k][0]].push_back(h);
    rot[g.edges[k][1]].push_back(h + 1);
    edges.push_back({h, h + 1});
  }
  return make_map(rot, edges);
}

Multigraph underlying_graph(const CombMap& m) {
  auto vof = vertex_of_halfedge(m);
  Multigraph g;
  g.n = vertex_count(m);
  for (auto& e : edge_list(m)) g.edges.push_back({vof[e[0]], vof[e[1]]});
  return g;
}

}  // namespace vg
