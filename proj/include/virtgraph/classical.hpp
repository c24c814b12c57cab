#pragma once

#include <string>
#include <vector>

#include "virtgraph/algebra.hpp"
#include "virtgraph/combmap.hpp"

namespace vg {

enum class Engine { StateSum, ContractionDeletion, Brauer };
const char* engine_name(Engine e);

// Flow polynomial in Q. Rotation data is ignored.
HalfLaurent flow_poly(const CombMap& m, Engine engine = Engine::ContractionDeletion);
// S-polynomial in Q. Twisted maps are rejected.
HalfLaurent s_poly(const CombMap& m, Engine engine = Engine::ContractionDeletion);

// Exponent b1 - g in half-steps for the spanning submap keeping the edges in `kept`.
long s_exponent_half(const CombMap& m, const std::vector<char>& kept);

// P'(X, Y, A, B) with key (X, Y, A, B) exponents; A and B exponents are Euler genera.
KrushkalPoly krushkal_poly(const CombMap& m);
HalfLaurent specialize_krushkal_to_s(const KrushkalPoly& p, int b1);

// Virtual chromatic polynomial by the deletion-contraction recursion, in t.
HalfLaurent virtual_chromatic(const CombMap& m);
// Q^{b0 - g} S_{G*}(Q), retagged to t.
HalfLaurent virtual_chromatic_via_dual(const CombMap& m);

struct DegreeReport {
  long bound = 0;  // b1 - g
  bool attained = false;
  bool monic = false;
  bool has_coloop = false;
  HalfLaurent s{Var::Q};
  HalfLaurent i_poly{Var::t};  // t^{b1-g} S(1/t)
};
DegreeReport degree_report(const CombMap& m);

struct CheckLine {
  std::string name;
  std::string lhs, rhs;
  bool ok = false;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool ok() const;
  void add(const std::string& name, const HalfLaurent& lhs, const HalfLaurent& rhs);
  void add(const std::string& name, const Rational& lhs, const Rational& rhs);
  void add(const std::string& name, bool ok, const std::string& detail = "");
  void append(const CheckReport& o);
  std::string str() const;
};

// Edge connect sum, disjoint union vs wedge, and (when both have a degree-3 vertex) the
// trivalent vertex connect sum identity.
CheckReport connect_sum_checks(const CombMap& a, const CombMap& b);
// S(1) = 0, S(0) = F(0), the flip law at Q = 4 for every vertex, bridge equivalences.
CheckReport special_value_checks(const CombMap& m);

int g_min(const CombMap& m);

// Drop contraction-deletion memo tables (they are thread-local).
void clear_memo();

}  // namespace vg
