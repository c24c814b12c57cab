#include <doctest.h>

#include <random>

#include "virtgraph/families.hpp"
#include "virtgraph/penrose.hpp"

using namespace vg;
namespace fx = vg::fixtures;

namespace {
HalfLaurent NP(std::vector<std::pair<Rational, int>> roots, Rational lead = 1) {
  return product_of_linear(Var::N, roots, lead);
}
CombMap signs(CombMap m, std::vector<int> s) {
  for (size_t v = 0; v < s.size(); ++v) m = set_vertex_sign(m, static_cast<int>(v), s[v]);
  return m;
}
}  // namespace

TEST_CASE("w_so anchors") {
  CHECK(w_so(fx::point()) == HalfLaurent::power_of(Var::N, 1));
  CHECK(w_so(fx::loop1()) == NP({{0, 1}, {1, 1}}));
  HalfLaurent theta = NP({{0, 1}, {1, 1}, {2, 1}});
  CHECK(w_so(fx::theta_p()) == theta);
  // the other rotation differs by the flip sign of a trivalent vertex
  CHECK(w_so(fx::theta_t()) == -theta);
  CHECK(w_so(fx::bridge()).is_zero());
  CHECK(w_so(subdivide(fx::theta_p(), 1)) == Rational(2) * theta);
  CHECK(w_so(edge_twist(fx::theta_p(), 0)) == -theta);
  for (auto& m : connected_maps(4)) {
    auto w = w_so(m);
    for (auto& [k, c] : w.terms()) CHECK(c.get_den() == 1);
    auto deg = vertex_degrees(m);
    if (std::find(deg.begin(), deg.end(), 1) != deg.end()) CHECK(w.is_zero());
  }
}

TEST_CASE("w_sl anchors") {
  auto pminus = NP({{0, 2}, {1, 1}, {-1, 1}}, 2);
  auto pplus = NP({{1, 1}, {-1, 1}, {2, 1}, {-2, 1}}, 2);
  auto th = fx::theta_p();
  CHECK(w_sl_extended(signs(th, {-1, -1})) == pminus);
  CHECK(w_sl_brauer(signs(th, {-1, -1})) == pminus);
  CHECK(w_sl_extended(signs(th, {1, 1})) == pplus);
  CHECK(w_sl_brauer(signs(th, {1, 1})) == pplus);
  // a loop with s = +1: twice N^2 - 1 in this normalization
  auto loop = signs(fx::loop1(), {1});
  CHECK(w_sl_extended(loop) == NP({{1, 1}, {-1, 1}}, 2));
  CHECK(w_sl_brauer(loop) == w_sl_extended(loop));
  CHECK(w_sl_extended(fx::point()) == HalfLaurent::constant(Var::N, 2));
  CHECK(w_sl_extended(signs(fx::point(), {-1})).is_zero());
  // subdivision by a vertex of sign a multiplies by 1 + a
  auto sub = subdivide(with_parity_signs(th), 0);
  int nv = vertex_count(sub) - 1;
  CHECK(w_sl_extended(sub) == Rational(2) * pminus);
  CHECK(w_sl_extended(set_vertex_sign(sub, nv, -1)).is_zero());
  CHECK(w_sl_brauer(set_vertex_sign(sub, nv, -1)).is_zero());
}

TEST_CASE("w_sl engines agree on the family") {
  std::mt19937 rng(11);
  for (auto& m : connected_maps(5)) {
    CombMap s = with_parity_signs(m);
    auto ext = w_sl_extended(s);
    CHECK(ext == w_sl_brauer(s));
    for (auto& [k, c] : ext.terms()) CHECK(k % 4 == 0);
    int V = vertex_count(m);
    CombMap r = s;
    for (int v = 0; v < V; ++v)
      if (rng() % 2) r = set_vertex_sign(r, v, -vertex_sign(r, v));
    CHECK(w_sl_extended(r) == w_sl_brauer(r));
  }
}

TEST_CASE("so as sl") {
  auto l = so_as_sl_check(fx::loop1());
  CHECK(l.ok());
  for (auto& m : connected_maps(4)) {
    auto rep = so_as_sl_check(m);
    CHECK_MESSAGE(rep.ok(), rep.str());
  }
  auto rep = so_as_sl_check(signs(fx::theta_p(), {1, -1}));
  CHECK(rep.ok());
  CHECK(so_as_sl_check(edge_twist(fx::k4(), 2)).ok());
}

TEST_CASE("w_so relations") {
  std::vector<CombMap> maps = {fx::theta_p(), fx::theta_t(), fx::loop1(), fx::bouquet2_int(), fx::k4(),
                               edge_twist(fx::theta_p(), 1), edge_twist(fx::bouquet2_int(), 0)};
  for (auto& m : connected_maps(3)) maps.push_back(m);
  for (auto& m : maps)
    for (int e = 0; e < m.edge_count(); ++e) {
      auto rep = w_so_relation_suite(m, e);
      CHECK_MESSAGE(rep.ok(), rep.str());
    }
}

TEST_CASE("w_sl relations") {
  std::vector<CombMap> maps = {fx::theta_p(), fx::theta_t(), fx::loop1(), fx::bouquet2_int(), fx::k4(),
                               signs(fx::theta_p(), {1, -1}), signs(fx::loop1(), {-1})};
  std::mt19937 rng(3);
  for (auto& m : connected_maps(3)) {
    CombMap s = with_parity_signs(m);
    for (int v = 0; v < vertex_count(s); ++v)
      if (rng() % 3 == 0) s = set_vertex_sign(s, v, -vertex_sign(s, v));
    maps.push_back(s);
  }
  for (auto& m : maps)
    for (int e = 0; e < m.edge_count(); ++e) {
      auto rep = w_sl_relation_suite(m, e);
      CHECK_MESSAGE(rep.ok(), rep.str());
    }
}

TEST_CASE("IHX") {
  auto rep = ihx_check();
  CHECK_MESSAGE(rep.ok(), rep.str());
}

TEST_CASE("cellular embedding polynomial and planarity") {
  CHECK(cellular_embedding_poly(fx::theta_p()) == HalfLaurent::linear(Var::x, -2, 2));
  CHECK(cellular_embedding_poly(fx::k33_std()).eval(0) == 0);
  CHECK(cellular_embedding_poly(fx::k4()).eval(0) != 0);
  CHECK_THROWS_AS(cellular_embedding_poly(fx::loop1()), MapError);
  auto t = planarity_by_flips(fx::theta_t());
  REQUIRE(t.witness);
  CHECK(*t.witness == std::vector<int>{1});
  CHECK(!planarity_by_flips(fx::k33_std()).planar_somehow);
  auto l = planarity_by_flips(fx::loop1());
  REQUIRE(l.witness);
  CHECK(l.witness->empty());
  CubicOptions opt;
  opt.max_vertices = 6;
  for (auto& g : cubic_graphs(opt)) {
    CombMap m = map_from_graph(g);
    auto c = cellular_embedding_poly(m);
    CHECK(c.eval(1) == 0);
    auto p = planarity_by_flips(m);
    CHECK((c.eval(0) != 0) == p.planar_somehow);
    auto w = w_sl_extended(with_parity_signs(m));
    long b1 = m.edge_count() - vertex_count(m) + 1;
    CHECK((!w.is_zero() && w.max_half_exp() == 4 * b1) == p.planar_somehow);
  }
}

TEST_CASE("penrose numbers") {
  for (auto m : {fx::theta_p(), fx::theta_t(), fx::k4(), fx::k33_std(), fx::loop1(), fx::bouquet2_int(), fx::cycle(3)}) {
    auto rep = penrose_number_checks(m);
    CHECK_MESSAGE(rep.ok(), rep.str());
  }
  auto sl = w_sl_extended(with_parity_signs(fx::theta_p()));
  CHECK(sl.eval(2) == 24);
  CHECK(w_sl_extended(with_parity_signs(fx::theta_t())).eval(2) == -24);
  for (auto& m : connected_maps(4)) CHECK(penrose_number_checks(m).ok());
  CHECK(penrose_number_checks(edge_twist(fx::theta_p(), 0)).ok());
}
