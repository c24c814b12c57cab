#pragma once

#include <map>
#include <vector>

#include "virtgraph/algebra.hpp"
#include "virtgraph/classical.hpp"
#include "virtgraph/combmap.hpp"

namespace vg {

// Perfect matching on bottom + top boundary points. Bottom points are 0..bottom-1 and
// top points bottom..bottom+top-1, both left to right.
struct BrauerMatching {
  int bottom = 0, top = 0;
  std::vector<int> pair;
  auto operator<=>(const BrauerMatching&) const = default;
};

BrauerMatching make_matching(int bottom, int top, const std::vector<std::array<int, 2>>& pairs);

// Formal combination of matchings with coefficients in c (the loop value).
class BrauerVector {
 public:
  BrauerVector() = default;
  explicit BrauerVector(const BrauerMatching& d, const HalfLaurent& coeff = HalfLaurent::constant(Var::c, 1));

  const std::map<BrauerMatching, HalfLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const BrauerMatching& d, const HalfLaurent& coeff);

  BrauerVector& operator+=(const BrauerVector& o);
  BrauerVector& operator-=(const BrauerVector& o);
  friend BrauerVector operator+(BrauerVector a, const BrauerVector& b) { return a += b; }
  friend BrauerVector operator-(BrauerVector a, const BrauerVector& b) { return a -= b; }
  friend BrauerVector operator*(const HalfLaurent& s, const BrauerVector& v);
  bool operator==(const BrauerVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<BrauerMatching, HalfLaurent> terms_;
};

struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a after b: the top of b is glued to the bottom of a; closed loops become factors of c.
BrauerVector compose(const BrauerVector& a, const BrauerVector& b);
BrauerVector tensor(const BrauerVector& a, const BrauerVector& b);
HalfLaurent close_trace(const BrauerVector& a);

namespace diagrams {
BrauerVector id(int n);
BrauerVector cup();  // 0 -> 2
BrauerVector cap();  // 2 -> 0
BrauerVector e();    // cup after cap
BrauerVector x();    // crossing
BrauerVector jones_wenzl2();  // id - c^{-1} e
}  // namespace diagrams

CheckReport br2_idempotent_verify();

// Phi functor evaluation of a closed untwisted map; equals the S-polynomial.
HalfLaurent phi_evaluate(const CombMap& m);

// Fixed-point-free permutations of n boundary points, lexicographic.
std::vector<std::vector<int>> fpf_basis(int n);
// Closed map from sigma (one side) and tau (other side) joined by n edges.
CombMap glue(const std::vector<int>& sigma, const std::vector<int>& tau);
HalfLaurent glue_pairing(const std::vector<int>& sigma, const std::vector<int>& tau);
std::vector<std::vector<HalfLaurent>> gram_matrix(int n);
// Exact determinant by evaluation at integers and interpolation. n = 6 needs allow_long.
HalfLaurent gram_det(int n, bool allow_long = false);
Integer bareiss_det(std::vector<std::vector<Integer>> a);

struct SymTerm {
  Rational coeff;
  std::vector<int> parts;  // partition with parts >= 2
};
std::vector<std::vector<int>> partitions_min2(int n);
// <p(lambda), p(mu)> at Q.
Rational sym_pairing(const std::vector<int>& lambda, const std::vector<int>& mu, const Rational& Q);
bool sym_negligible_verify(long Q, const std::vector<SymTerm>& candidate);
// The listed negligible combination at Q = k^2, k = 1..7.
std::vector<SymTerm> negligible_table_row(long Q);

}  // namespace vg
