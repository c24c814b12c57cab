#include <doctest.h>

#include <random>

#include "virtgraph/spatial.hpp"

using namespace vg;
namespace fx = vg::fixtures;

namespace {
HalfLaurent qpoly(std::map<long, long> t) {
  HalfLaurent p(Var::q);
  for (auto [e, c] : t) p.add_term(2 * e, c);
  return p;
}

SpatialDiagram curl_on_cycle() {
  MoveSite s{{0}, {1}};
  return apply_move(crossingless(fx::cycle(2)), MoveKind::R1, s);
}

std::vector<SpatialDiagram> test_diagrams() {
  return {crossingless(fx::theta_p()), fx::theta_t_as_spatial(), crossingless(fx::k4()), fx::k4_r2(),
          fx::trefoil(),              fx::knotted_theta(),       fx::k33_drawn(),          curl_on_cycle()};
}

// The move pair compared for invariance: R3 and IV compare the two sides of the move.
std::pair<SpatialDiagram, SpatialDiagram> move_pair(const SpatialDiagram& d, MoveKind k, const MoveSite& s) {
  if (k == MoveKind::R3 || k == MoveKind::IV) {
    MoveSite a = s, b = s;
    a.params.back() = 0;
    b.params.back() = 1;
    return {apply_move(d, k, a), apply_move(d, k, b)};
  }
  return {d, apply_move(d, k, s)};
}
}  // namespace

TEST_CASE("yamada anchors") {
  auto th = fx::theta_t_as_spatial();
  CHECK(yamada(th, Variant::S) == qpoly({{1, -2}, {0, -2}, {-1, -2}}));
  CHECK(yamada(th, Variant::F) == qpoly({{1, 1}, {-1, 1}}) * qpoly({{1, 1}, {0, 1}, {-1, 1}}));
  auto cyc = crossingless(fx::cycle(3));
  CHECK(yamada(cyc, Variant::S) == qpoly({{1, 1}, {0, 1}, {-1, 1}}));
  CHECK(yamada(cyc, Variant::F) == qpoly({{1, 1}, {0, 1}, {-1, 1}}));
  // trefoil and its mirror differ
  auto tr = fx::trefoil();
  CHECK(tr.crossings.size() == 3);
  CHECK(yamada(tr, Variant::S, true) == yamada(tr, Variant::S).reflected());
  CHECK(yamada(tr, Variant::S) != yamada(tr, Variant::S).reflected());
}

TEST_CASE("crossing expansion") {
  auto zero = expand_crossings(crossingless(fx::k4()));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coeff == HalfLaurent::constant(Var::q, 1));
  auto one = expand_crossings(curl_on_cycle());
  REQUIRE(one.size() == 3);
  CHECK(one[0].coeff == HalfLaurent::power_of(Var::q, 1));
  CHECK(one[1].coeff == HalfLaurent::power_of(Var::q, -1));
  CHECK(one[2].coeff == HalfLaurent::constant(Var::q, -1));
  CHECK(expand_crossings(fx::k4_r2()).size() == 9);
  CHECK(expand_crossings(fx::knotted_theta()).size() == 27);
  for (auto& m : {fx::theta_p(), fx::theta_t(), fx::k4(), fx::k33_std(), fx::bouquet2_int(), fx::bridge()}) {
    CHECK(yamada(crossingless(m), Variant::S) == substitute_q_shift(s_poly(m)));
    CHECK(yamada(crossingless(m), Variant::F) == substitute_q_shift(flow_poly(m)));
  }
}

TEST_CASE("diagram validation") {
  auto d = fx::k4_r2();
  CHECK(validate(d).empty());
  auto bad = d;
  bad.crossings[0].over[1] = d.base.sigma[d.crossings[0].over[0]];
  CHECK(!validate(bad).empty());
  CHECK_THROWS_AS(yamada(bad, Variant::S), MapError);
  CHECK_THROWS_AS(apply_move(d, MoveKind::CrossingChange, MoveSite{{999}, {}}), MoveError);
}

TEST_CASE("move invariance") {
  std::mt19937 rng(20240611);
  const MoveKind kinds[] = {MoveKind::R2, MoveKind::R3, MoveKind::IV, MoveKind::VirtualRelabel};
  int pairs = 0;
  for (auto& d : test_diagrams())
    for (auto k : kinds)
      for (int i = 0; i < 2; ++i) {
        auto site = random_site(d, k, rng);
        if (!site) continue;
        auto [a, b] = move_pair(d, k, *site);
        INFO(move_name(k));
        CHECK(yamada(a, Variant::S) == yamada(b, Variant::S));
        CHECK(yamada(a, Variant::F) == yamada(b, Variant::F));
        ++pairs;
      }
  CHECK(pairs >= 50);
  // R1 shifts by q^{+-2}
  auto d = fx::knotted_theta();
  HalfLaurent r = yamada(d, Variant::S);
  for (int over = 0; over < 2; ++over) {
    auto c = apply_move(d, MoveKind::R1, MoveSite{{0}, {over}});
    auto y = yamada(c, Variant::S);
    CHECK((y == r.shifted(4) || y == r.shifted(-4)));
  }
  // a virtual relabel leaves the canonical base unchanged
  auto rel = apply_move(d, MoveKind::VirtualRelabel, *random_site(d, MoveKind::VirtualRelabel, rng));
  CHECK(canonical_key(rel.base) == canonical_key(d.base));
}

TEST_CASE("forbidden moves at roots of unity") {
  std::mt19937 rng(7);
  int seen = 0;
  for (auto& d : {fx::knotted_theta(), fx::k33_drawn(), fx::k4_r2(), fx::trefoil()})
    for (int i = 0; i < 4; ++i) {
      auto site = random_site(d, MoveKind::Forbidden, rng);
      if (!site) continue;
      auto after = apply_move(d, MoveKind::Forbidden, *site);
      auto rep = forbidden_move_checks(d, after);
      INFO(rep.str());
      CHECK(rep.ok());
      ++seen;
    }
  CHECK(seen >= 8);
}

TEST_CASE("obstruction class") {
  CHECK(obstruction_z2(crossingless(fx::k33_std())).is_zero());
  CHECK(obstruction_z2(curl_on_cycle()).is_zero());  // e ^ e = 0
  CHECK(obstruction_z2(fx::k4_r2()).is_zero());      // two crossings between one pair
  CHECK(obstruction_z(fx::k4_r2()).is_zero());
  auto k33 = fx::k33_drawn();
  CHECK(!obstruction_z2(k33).is_zero());
  CHECK(!obstruction_z(k33).is_zero());
  std::mt19937 rng(11);
  const MoveKind kinds[] = {MoveKind::R1,       MoveKind::R2,        MoveKind::R3,
                            MoveKind::IV,       MoveKind::Forbidden, MoveKind::CrossingChange,
                            MoveKind::Virtualization};
  for (auto& d : test_diagrams())
    for (auto k : kinds)
      for (int i = 0; i < 2; ++i) {
        auto site = random_site(d, k, rng);
        if (!site) continue;
        auto [a, b] = move_pair(d, k, *site);
        INFO(move_name(k));
        CHECK(obstruction_z2(a) == obstruction_z2(b));
        // virtualization changes a crossing sign, so only the mod 2 class survives it
        if (k != MoveKind::Virtualization) CHECK(obstruction_z(a) == obstruction_z(b));
      }
  // relabeling: order chains through the permutation
  for (auto& d : test_diagrams()) {
    auto site = *random_site(d, MoveKind::VirtualRelabel, rng);
    auto b = apply_move(d, MoveKind::VirtualRelabel, site);
    CHECK(obstruction_z2(d) == obstruction_z2(b, site.params));
    CHECK(obstruction_z(d) == obstruction_z(b, site.params));
  }
}

TEST_CASE("special evaluations and classification") {
  for (auto& d : test_diagrams()) {
    auto rep = special_evaluation_checks(d);
    INFO(rep.str());
    CHECK(rep.ok());
  }
  auto th = fx::theta_t_as_spatial();
  CHECK(yamada(th, Variant::S).eval(1) == -6);
  CHECK(s_poly(fx::theta_t()).eval(4) == -6);
  auto rep = nonclassicality_report(th);
  CHECK(rep.verdict == "nonclassical");
  CHECK(rep.not_pliable);
  CHECK(nonclassicality_report(crossingless(fx::theta_p())).verdict == "inconclusive");
  CHECK(nonclassicality_report(crossingless(fx::cycle(4))).verdict == "inconclusive");
  CHECK(nonclassicality_report(fx::knotted_theta()).verdict == "inconclusive");
}

TEST_CASE("golden identity") {
  CHECK(golden_identity_check(crossingless(fx::theta_p())));
  CHECK(golden_identity_check(crossingless(fx::k4())));
  CHECK(golden_identity_check(fx::k4_r2()));
  CHECK(golden_identity_check(fx::knotted_theta()));
  auto samples = fx::classical_cubic_samples(6, 4, 3, 3);
  int crossed = 0;
  for (auto& d : samples) {
    CHECK(golden_identity_check(d));
    crossed += !d.crossings.empty();
  }
  CHECK(crossed >= 10);
  auto th = fx::theta_t_as_spatial();
  CHECK(!golden_identity(th, Variant::S).holds);
  CHECK(golden_identity(th, Variant::F).holds);
  CHECK_THROWS_AS(golden_identity_check(th), MapError);
  CHECK_THROWS_AS(golden_identity_check(fx::trefoil()), MapError);
}
