#include "virtgraph/algebra.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

namespace vg {

std::string to_string(const Rational& r) { return r.get_str(); }

TagMismatch::TagMismatch(Var a, Var b)
    : std::logic_error(std::string("variable tag mismatch: ") + static_cast<char>(a) + " vs " +
                       static_cast<char>(b)) {}

HalfLaurent HalfLaurent::constant(Var v, const Rational& c) {
  HalfLaurent p(v);
  p.add_term(0, c);
  return p;
}

HalfLaurent HalfLaurent::monomial(Var v, long half_exp, const Rational& c) {
  HalfLaurent p(v);
  p.add_term(half_exp, c);
  return p;
}

HalfLaurent HalfLaurent::linear(Var v, const Rational& a, const Rational& b) {
  HalfLaurent p(v);
  p.add_term(2, a);
  p.add_term(0, b);
  return p;
}

bool HalfLaurent::integral_exponents() const {
  for (auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

Rational HalfLaurent::coeff(long half_exp) const {
  auto it = terms_.find(half_exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

long HalfLaurent::min_half_exp() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no minimal exponent");
  return terms_.begin()->first;
}

long HalfLaurent::max_half_exp() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

void HalfLaurent::check(const HalfLaurent& o) const {
  if (var_ != o.var_) throw TagMismatch(var_, o.var_);
}

void HalfLaurent::add_term(long e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  check(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  check(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  check(o);
  HalfLaurent r(var_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  terms_.swap(r.terms_);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool HalfLaurent::operator==(const HalfLaurent& o) const {
  check(o);
  return terms_ == o.terms_;
}

HalfLaurent HalfLaurent::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
    auto [e, c] = *terms_.begin();
    Rational inv = Rational(1) / c, r = 1;
    for (long i = 0; i < -k; ++i) r *= inv;
    return monomial(var_, e * k, r);
  }
  HalfLaurent result = constant(var_, 1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

HalfLaurent HalfLaurent::shifted(long half_exp) const {
  HalfLaurent r(var_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e + half_exp, c);
  return r;
}

Rational HalfLaurent::eval(const Rational& x) const {
  Rational total = 0;
  for (auto& [e, c] : terms_) {
    if (e % 2 != 0) throw std::domain_error("rational evaluation of a half-integer exponent");
    long k = e / 2;
    Rational p = 1;
    if (k >= 0) {
      mpz_pow_ui(p.get_num_mpz_t(), x.get_num_mpz_t(), k);
      mpz_pow_ui(p.get_den_mpz_t(), x.get_den_mpz_t(), k);
    } else {
      if (x == 0) throw std::domain_error("negative power evaluated at zero");
      mpz_pow_ui(p.get_num_mpz_t(), x.get_den_mpz_t(), -k);
      mpz_pow_ui(p.get_den_mpz_t(), x.get_num_mpz_t(), -k);
    }
    p.canonicalize();
    total += c * p;
  }
  return total;
}

HalfLaurent HalfLaurent::reflected() const {
  HalfLaurent r(var_);
  for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

HalfLaurent HalfLaurent::rescaled(Var w, long factor) const {
  HalfLaurent r(w);
  for (auto& [e, c] : terms_) r.add_term(e * factor, c);
  return r;
}

HalfLaurent HalfLaurent::retagged(Var w) const {
  HalfLaurent r = *this;
  r.var_ = w;
  return r;
}

static std::string exponent_str(long e) {
  if (e % 2 == 0) {
    long k = e / 2;
    if (k == 1) return "";
    if (k < 0) return "^" + std::to_string(k);
    return "^" + std::to_string(k);
  }
  return "^{" + std::to_string(e) + "/2}";
}

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  char v = static_cast<char>(var_);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    long e = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << to_string(a);
      continue;
    }
    if (a != 1) os << to_string(a) << "*";
    os << v << exponent_str(e);
  }
  return os.str();
}

Degree degree_leading(const HalfLaurent& p) {
  Degree d;
  if (p.is_zero()) return d;
  d.minus_infinity = false;
  d.half_exp = p.terms().rbegin()->first;
  d.coeff = p.terms().rbegin()->second;
  return d;
}

HalfLaurent substitute_q_shift(const HalfLaurent& p) {
  if (p.tag() != Var::Q) throw TagMismatch(p.tag(), Var::Q);
  HalfLaurent root(Var::q);  // q^{1/2} + q^{-1/2}
  root.add_term(1, 1);
  root.add_term(-1, 1);
  HalfLaurent out(Var::q);
  std::vector<HalfLaurent> powers{HalfLaurent::constant(Var::q, 1)};
  for (auto& [e, c] : p.terms()) {
    if (e < 0) throw std::domain_error("substitute_q_shift: negative exponent of Q");
    while (static_cast<long>(powers.size()) <= e) powers.push_back(powers.back() * root);
    out += powers[e] * c;
  }
  return out;
}

HalfLaurent product_of_linear(Var v, const std::vector<std::pair<Rational, int>>& roots, const Rational& lead) {
  HalfLaurent r = HalfLaurent::constant(v, lead);
  for (auto& [root, mult] : roots) r *= HalfLaurent::linear(v, 1, -root).pow(mult);
  return r;
}

// ---------------------------------------------------------------- cyclotomic

int Cyclotomic::totient(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& Cyclotomic::cyclotomic_poly(int n) {
  thread_local std::unordered_map<int, std::vector<long long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for proper divisors d
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<long long> den = cyclotomic_poly(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> quo(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long long q = num[i];
      quo[i - dd] = q;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
    }
    num = quo;
  }
  return cache.emplace(n, num).first->second;
}

std::vector<Rational> Cyclotomic::reduce(int n, std::vector<Rational> full) {
  const auto& phi = cyclotomic_poly(n);
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(full.size()) - 1; i >= d; --i) {
    if (full[i] == 0) continue;
    Rational q = full[i];
    for (int j = 0; j <= d; ++j) full[i - d + j] -= q * Rational(static_cast<long>(phi[j]));
  }
  full.resize(d);
  if (d == 0) full.clear();
  return full;
}

Cyclotomic::Cyclotomic(int conductor, const Rational& r) : n_(conductor) {
  if (conductor < 1) throw std::domain_error("conductor must be positive");
  c_.assign(totient(conductor), Rational(0));
  c_[0] = r;
}

Cyclotomic Cyclotomic::zeta(int n, long power) {
  Cyclotomic z(n, 0);
  long k = ((power % n) + n) % n;
  std::vector<Rational> full(std::max<long>(k + 1, 1), Rational(0));
  full[k] = 1;
  z.c_ = reduce(n, full);
  z.c_.resize(totient(n), Rational(0));
  return z;
}

bool Cyclotomic::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m % n_ != 0) throw std::domain_error("embedding requires a multiple of the conductor");
  int f = m / n_;
  std::vector<Rational> full(static_cast<size_t>(c_.size() > 0 ? (c_.size() - 1) * f + 1 : 1), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) full[i * f] = c_[i];
  Cyclotomic r(m, 0);
  r.c_ = reduce(m, full);
  r.c_.resize(totient(m), Rational(0));
  return r;
}

static int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int m = lcm_int(n_, o.n_);
    *this = embed(m);
    return *this += o.embed(m);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int m = lcm_int(n_, o.n_);
    *this = embed(m);
    return *this -= o.embed(m);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int m = lcm_int(n_, o.n_);
    *this = embed(m);
    return *this *= o.embed(m);
  }
  std::vector<Rational> full(c_.size() * 2 + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) full[i + j] += c_[i] * o.c_[j];
  }
  c_ = reduce(n_, full);
  c_.resize(totient(n_), Rational(0));
  return *this;
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) throw std::domain_error("negative power of a cyclotomic element");
  Cyclotomic r(n_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (o.n_ != n_) {
    int m = lcm_int(n_, o.n_);
    return embed(m) == o.embed(m);
  }
  return c_ == o.c_;
}

std::string Cyclotomic::str() const {
  HalfLaurent p(Var::x);
  for (size_t i = 0; i < c_.size(); ++i) p.add_term(2 * static_cast<long>(i), c_[i]);
  return "[" + p.str() + " mod Phi_" + std::to_string(n_) + "(x)]";
}

Cyclotomic eval_cyclotomic(const HalfLaurent& p, int n, long k) {
  if (n < 1) throw std::domain_error("conductor must be positive");
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, static_cast<long>(n)) != 1 && !(n == 1))
    throw std::domain_error("eval_cyclotomic: root power must be coprime to the conductor");
  int m = n;
  long step;  // zeta_m^step is the image of v^{1/2} (if doubled) or of v
  bool doubled = !p.integral_exponents();
  if (doubled) {
    m = 2 * n;
    step = (std::gcd(kk, static_cast<long>(m)) == 1) ? kk : kk + n;
  } else {
    step = kk;
  }
  std::vector<Rational> full(m, Rational(0));
  for (auto& [e, c] : p.terms()) {
    long mult = doubled ? e : e / 2;
    long pos = ((mult * step) % m + m) % m;
    full[pos] += c;
  }
  Cyclotomic r(m, 0);
  Cyclotomic acc(m, 0);
  for (long i = 0; i < m; ++i)
    if (full[i] != 0) {
      Cyclotomic z = Cyclotomic::zeta(m, i);
      Cyclotomic scaled(m, full[i]);
      acc += z * scaled;
    }
  return acc;
}

// ---------------------------------------------------------------- Krushkal

void KrushkalPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string KrushkalPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[4] = {"X", "Y", "A", "B"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (int i = 0; i < 4; ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (any) mono << "*";
      mono << names[i];
      if (e != 1) mono << "^" << e;
      any = true;
    }
    if (!any)
      os << to_string(a);
    else if (a == 1)
      os << mono.str();
    else
      os << to_string(a) << "*" << mono.str();
  }
  return os.str();
}

}  // namespace vg
