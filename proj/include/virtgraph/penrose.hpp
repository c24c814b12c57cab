#pragma once

#include <optional>
#include <vector>

#include "virtgraph/algebra.hpp"
#include "virtgraph/classical.hpp"
#include "virtgraph/combmap.hpp"

namespace vg {

// A signed map is a CombMap whose `sign` field is filled in (missing signs mean parity,
// s(v) = (-1)^deg v). Twists come from `twist`.
using SignedMap = CombMap;

// W_so(N): vertex -> cyclic matching on doubled strands, edge -> id - x (x - id if
// twisted), closed loop -> N. Isolated vertex -> N.
HalfLaurent w_so(const CombMap& m);

// Sum over W of (prod_{v in W} s(v)) S_{sigma_W m}(N^2). Twisted input throws MapError.
HalfLaurent w_sl_extended(const SignedMap& m);

// Vertex -> N^{-1}(cyclic + s(v) reversed), edge -> N id - e (N x - e if twisted).
HalfLaurent w_sl_brauer(const SignedMap& m);

// Sum over S of (-1)^{|S|} W_sl(tau_S m) computed with w_sl_brauer.
HalfLaurent w_so_via_sl(const SignedMap& m);

// W(G) = W(G/e) - W(tau_e G/e), vertex flips, subdivision, connect sums with theta.
CheckReport w_so_relation_suite(const CombMap& m, int e);
// Edge or loop relation at e, flip law, connect sums with theta.
CheckReport w_sl_relation_suite(const SignedMap& m, int e);
// so-as-sl: w_so_via_sl = N^{E-V} prod_v (1 + s(v)(-1)^deg v) w_so.
CheckReport so_as_sl_check(const SignedMap& m);
// IHX on two closures under w_so.
CheckReport ihx_check();

// Signed genus generating function sum_W (-1)^{|W|} x^{g(sigma_W m)}; cubic maps only.
HalfLaurent cellular_embedding_poly(const CombMap& m);

struct PlanarityResult {
  bool planar_somehow = false;
  std::optional<std::vector<int>> witness;
};
PlanarityResult planarity_by_flips(const CombMap& m);

// Parity-sign evaluations at N = +-2, N = 3 and Q = 4; a flipped sign kills W_sl(2).
CheckReport penrose_number_checks(const CombMap& m);

}  // namespace vg
