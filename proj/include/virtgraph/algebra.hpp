#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vg {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& r);

// Variable tags. Arithmetic never mixes tags.
enum class Var : char { Q = 'Q', q = 'q', N = 'N', t = 't', x = 'x', c = 'c' };

struct TagMismatch : std::logic_error {
  TagMismatch(Var a, Var b);
};

struct Degree {
  bool minus_infinity = true;
  long half_exp = 0;  // exponent in half-steps
  Rational coeff;
};

// Laurent polynomial in one variable, exponents stored in half-steps.
class HalfLaurent {
 public:
  explicit HalfLaurent(Var v = Var::Q) : var_(v) {}

  static HalfLaurent constant(Var v, const Rational& c);
  static HalfLaurent monomial(Var v, long half_exp, const Rational& c = 1);
  // v^k for integer k
  static HalfLaurent power_of(Var v, long k, const Rational& c = 1) { return monomial(v, 2 * k, c); }
  // a*v + b
  static HalfLaurent linear(Var v, const Rational& a, const Rational& b);

  Var tag() const { return var_; }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool integral_exponents() const;
  Rational coeff(long half_exp) const;
  long min_half_exp() const;
  long max_half_exp() const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  HalfLaurent& operator*=(const Rational& r);
  HalfLaurent operator-() const;
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  friend HalfLaurent operator*(HalfLaurent a, const Rational& r) { return a *= r; }
  friend HalfLaurent operator*(const Rational& r, HalfLaurent a) { return a *= r; }
  bool operator==(const HalfLaurent& o) const;
  bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

  void add_term(long half_exp, const Rational& c);
  HalfLaurent pow(long k) const;
  // multiply by v^{half_exp/2}
  HalfLaurent shifted(long half_exp) const;

  // value at an exact rational point; requires integer exponents (or zero polynomial)
  Rational eval(const Rational& x) const;
  // v -> v^{-1}
  HalfLaurent reflected() const;
  // v^{e} -> w^{factor*e}
  HalfLaurent rescaled(Var w, long factor) const;
  HalfLaurent retagged(Var w) const;

  std::string str() const;

 private:
  void check(const HalfLaurent& o) const;
  Var var_;
  std::map<long, Rational> terms_;
};

Degree degree_leading(const HalfLaurent& p);

// Q := q + 2 + q^{-1}, Q^{1/2} := q^{1/2} + q^{-1/2}. Negative exponents are rejected.
HalfLaurent substitute_q_shift(const HalfLaurent& p);

// Polynomial product of factors (a*v + b) raised to powers, a helper for fixtures.
HalfLaurent product_of_linear(Var v, const std::vector<std::pair<Rational, int>>& roots, const Rational& lead = 1);

// Element of Q(zeta_n) stored as residue modulo the n-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(int conductor, const Rational& r);
  static Cyclotomic zeta(int conductor, long power);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  Cyclotomic embed(int m) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic pow(long k) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  std::string str() const;

  static const std::vector<long long>& cyclotomic_poly(int n);
  static int totient(int n);

 private:
  static std::vector<Rational> reduce(int n, std::vector<Rational> full);
  int n_;
  std::vector<Rational> c_;
};

// Evaluate p at v = zeta_n^k. Requires gcd(k, n) = 1. Odd half-exponents double the conductor.
Cyclotomic eval_cyclotomic(const HalfLaurent& p, int conductor, long root_power);

// Four-variable polynomial in X, Y, A, B with integer exponents.
class KrushkalPoly {
 public:
  using Key = std::array<int, 4>;
  void add_term(const Key& k, const Rational& c);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool operator==(const KrushkalPoly& o) const { return terms_ == o.terms_; }
  std::string str() const;

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace vg
