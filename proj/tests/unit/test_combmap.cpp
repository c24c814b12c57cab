#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "virtgraph/combmap.hpp"
#include "virtgraph/families.hpp"

using namespace vg;
namespace fx = vg::fixtures;

TEST_CASE("validate") {
  CHECK(validate(fx::theta_p()).empty());
  CombMap bad = fx::theta_p();
  bad.alpha[0] = 0;
  auto d = validate(bad);
  CHECK(std::any_of(d.begin(), d.end(), [](auto& s) { return s.find("alpha not fixed-point-free") != std::string::npos; }));
  bad = fx::theta_p();
  bad.sigma[0] = bad.sigma[1];
  CHECK(!validate(bad).empty());
  CHECK_THROWS_AS(make_map({{0, 1, 1}}, {{0, 1}}), MapError);
}

TEST_CASE("euler data of fixtures") {
  auto t = euler_data(fx::theta_p());
  CHECK(t.v == 2);
  CHECK(t.e == 3);
  CHECK(t.b0 == 1);
  CHECK(t.b1 == 2);
  CHECK(t.faces == 3);
  CHECK(t.genus == 0);
  CHECK(euler_data(fx::theta_t()).faces == 1);
  CHECK(euler_data(fx::theta_t()).genus == 1);
  CHECK(euler_data(fx::loop1()).faces == 2);
  CHECK(euler_data(fx::loop1()).genus == 0);
  CHECK(euler_data(fx::bouquet2_int()).faces == 1);
  CHECK(euler_data(fx::bouquet2_int()).genus == 1);
  CHECK(euler_data(fx::k33_std()).genus == 1);
  CHECK(euler_data(fx::k4()).genus == 0);
  CHECK(euler_data(fx::point()).faces == 1);
}

TEST_CASE("partial duals and contraction") {
  auto pd = partial_dual(fx::bridge(), 0);
  CHECK(vertex_count(pd) == 1);
  CHECK(isomorphic(pd, fx::loop1()));
  CombMap all = fx::theta_p();
  for (int e = 0; e < 3; ++e) all = partial_dual(all, e);
  CHECK(isomorphic(all, geometric_dual(fx::theta_p())));
  CHECK(isomorphic(partial_dual(partial_dual(fx::loop1(), 0), 0), fx::loop1()));

  auto c = contract(fx::bridge(), 0);
  CHECK(vertex_count(c) == 1);
  CHECK(c.isolated() == 1);
  auto cl = contract(fx::loop1(), 0);
  CHECK(cl.isolated() == 2);
  CHECK(vertex_count(cl) == 2);
  auto ct = contract(fx::theta_p(), 0);
  CHECK(vertex_count(ct) == 1);
  CHECK(ct.edge_count() == 2);
  CHECK(euler_data(ct).genus == 0);
}

TEST_CASE("deletion") {
  auto d = delete_edge(fx::theta_p(), 1);
  CHECK(vertex_count(d) == 2);
  CHECK(d.edge_count() == 2);
  CHECK(face_count(d) == 2);
  CHECK(isomorphic(d, fx::cycle(2)));
  auto l = delete_edge(fx::loop1(), 0);
  CHECK(l.isolated() == 1);
  CHECK(isomorphic(delete_edge(fx::bouquet2_int(), 0), fx::loop1()));
  CHECK_THROWS_AS(delete_isolated_vertex(fx::loop1(), 0), MapError);
  CHECK(vertex_count(delete_isolated_vertex(l, 0)) == 0);
}

TEST_CASE("geometric dual") {
  auto d = geometric_dual(fx::theta_p());
  auto ed = euler_data(d);
  CHECK(ed.v == 3);
  CHECK(ed.e == 3);
  CHECK(ed.genus == 0);
  CHECK(isomorphic(geometric_dual(geometric_dual(fx::theta_t())), fx::theta_t()));
  auto dl = geometric_dual(fx::loop1());
  CHECK(dl.edge_count() == 1);
  CHECK(euler_data(dl).genus == 0);
  CHECK(isomorphic(dl, fx::bridge()));
}

TEST_CASE("flips and twists") {
  CHECK(isomorphic(vertex_flip(fx::theta_p(), 1), fx::theta_t()));
  auto tw = edge_twist(edge_twist(fx::theta_p(), 2), 2);
  CHECK(isomorphic(tw, fx::theta_p()));
  auto c = fx::cycle(3);
  CHECK(isomorphic(vertex_flip(c, 0), c));
  CHECK(isomorphic(vertex_flip(fx::bridge(), 0), fx::bridge()));
  CHECK(!isomorphic(fx::theta_p(), fx::theta_t()));
}

TEST_CASE("edge classes") {
  auto b = classify_edge(fx::bridge(), 0);
  CHECK(b.bridge);
  CHECK(b.coloop);
  auto l = classify_edge(fx::loop1(), 0);
  CHECK(l.loop);
  CHECK(!l.bridge);
  CHECK(!l.coloop);
  auto m = fx::bouquet2_int();
  CHECK(classify_edge(m, 0).coloop);
  CHECK(classify_edge(m, 1).coloop);
  CHECK(interlaced(m, 0, 1));
  CHECK_THROWS_AS(interlaced(m, 0, 0), MapError);
  for (int e = 0; e < 3; ++e) CHECK(classify_edge(fx::theta_t(), e).coloop);
  for (int e = 0; e < 3; ++e) CHECK(!classify_edge(fx::theta_p(), e).coloop);
}

TEST_CASE("sums and subdivision") {
  auto s = edge_connect_sum(fx::theta_p(), 0, fx::theta_p(), 1);
  CHECK(vertex_count(s) == 4);
  CHECK(s.edge_count() == 6);
  CHECK(validate(s).empty());
  auto sub = subdivide(fx::loop1(), 0);
  CHECK(vertex_count(sub) == 2);
  CHECK(sub.edge_count() == 2);
  CHECK(isomorphic(sub, fx::cycle(2)));
  auto u = disjoint_union(fx::theta_t(), fx::bouquet2_int());
  CHECK(euler_data(u).genus == 2);
  CHECK(euler_data(u).b0 == 2);
  auto v3 = vertex_connect_sum(fx::theta_p(), 0, fx::theta_p(), 1);
  CHECK(vertex_count(v3) == 2);
  CHECK(v3.edge_count() == 3);
  CHECK(isomorphic(v3, fx::theta_p()));
  CHECK_THROWS_AS(vertex_connect_sum(fx::cycle(2), 0, fx::theta_p(), 0), MapError);
  auto w = wedge(fx::loop1(), 0, fx::loop1(), 0);
  CHECK(vertex_count(w) == 1);
  CHECK(euler_data(w).genus == 0);
  CHECK(isomorphic(unsubdivide(sub, 1), fx::loop1()));
}

TEST_CASE("isomorphism and rotation variants") {
  auto t = fx::theta_p();
  std::vector<int> perm{3, 5, 0, 2, 4, 1};
  CHECK(isomorphic(relabel(t, perm), t));
  std::vector<int> genera;
  enumerate_rotation_variants(t, [&](const std::vector<int>&, const CombMap& m) { genera.push_back(euler_data(m).genus); });
  std::sort(genera.begin(), genera.end());
  CHECK(genera == std::vector<int>{0, 0, 1, 1});
  int count = 0;
  enumerate_rotation_variants(fx::k33_std(), [&](const std::vector<int>&, const CombMap&) { ++count; });
  CHECK(count == 64);
}

TEST_CASE("structural properties on the small family") {
  auto fam = connected_maps(4);
  CHECK(fam.size() > 100);
  for (auto& m : fam) {
    auto ed = euler_data(m);
    CHECK(ed.genus == euler_data(geometric_dual(m)).genus);
    CombMap all = m;
    for (int e = 0; e < m.edge_count(); ++e) {
      CHECK(face_count(contract(m, e)) == ed.faces);
      int df = face_count(delete_edge(m, e));
      CHECK((classify_edge(m, e).coloop ? df == ed.faces + 1 : df == ed.faces - 1));
      CHECK(isomorphic(partial_dual(partial_dual(m, e), e), m));
      for (int f = e + 1; f < m.edge_count(); ++f)
        CHECK(isomorphic(partial_dual(partial_dual(m, e), f), partial_dual(partial_dual(m, f), e)));
      auto s = subdivide(m, e);
      auto es = euler_data(s);
      CHECK(es.genus == ed.genus);
      CHECK(es.faces == ed.faces);
      CHECK(es.b0 == ed.b0);
      all = partial_dual(all, e);
    }
    CHECK(isomorphic(all, geometric_dual(m)));
  }
}

TEST_CASE("twisted partial duals") {
  auto fam = connected_maps(3);
  std::mt19937 rng(5);
  for (auto& m : fam) {
    CombMap t = m;
    for (int e = 0; e < m.edge_count(); ++e)
      if (rng() % 2) t = edge_twist(t, e);
    auto vof = vertex_of_halfedge(t);
    auto el = edge_list(t);
    for (int e = 0; e < t.edge_count(); ++e) {
      auto [a, b] = el[e];
      // involutive up to turning over the far endpoint of a twisted non-loop edge
      CombMap expect = (t.twisted(a) && vof[a] != vof[b]) ? vertex_turn_over(t, vof[b]) : t;
      CHECK(isomorphic(partial_dual(partial_dual(t, e), e), expect));
      CHECK(face_count(contract(t, e)) == face_count(t));
    }
  }
}

TEST_CASE("family sizes") {
  // brute force over every sigma with the standard alpha
  for (int m = 1; m <= 4; ++m) {
    std::set<std::vector<int>> classes;
    std::vector<int> perm(2 * m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      CombMap c;
      c.sigma = perm;
      c.alpha.resize(2 * m);
      for (int h = 0; h < 2 * m; ++h) c.alpha[h] = h ^ 1;
      if (component_count(c) == 1) classes.insert(canonical_code(c));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::vector<int>> grown;
    for (auto& c : connected_maps(m))
      if (c.edge_count() == m) grown.insert(canonical_code(c));
    CHECK(grown == classes);
  }
  CubicOptions opt;
  opt.max_vertices = 10;
  opt.allow_loops = true;
  opt.bridgeless = false;
  int byn[12] = {};
  for (auto& g : cubic_graphs(opt)) byn[g.n]++;
  CHECK(byn[2] == 2);
  CHECK(byn[4] == 5);
  CHECK(byn[6] == 17);
  CHECK(byn[8] == 71);
  CHECK(byn[10] == 388);
  CubicOptions simple;
  simple.max_vertices = 10;
  simple.allow_multi = false;
  simple.bridgeless = false;
  int sn[12] = {};
  for (auto& g : cubic_graphs(simple)) sn[g.n]++;
  CHECK(sn[4] == 1);
  CHECK(sn[6] == 2);
  CHECK(sn[8] == 5);
  CHECK(sn[10] == 19);
}
