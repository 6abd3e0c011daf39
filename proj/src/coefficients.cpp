#include "bt/coefficients.hpp"

#include <sstream>

namespace bt {

namespace {

using u128 = unsigned __int128;

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

void check_mod(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw std::invalid_argument("GF(p) operands from different fields");
}

}  // namespace

ModP::ModP(std::int64_t x, std::uint64_t prime) : v(reduce(x, prime)), p(prime) {}

ModP ModP::operator+(const ModP& o) const {
  check_mod(p, o.p);
  std::uint64_t s = v + o.v;
  if (s >= p) s -= p;
  return ModP{static_cast<std::int64_t>(s), p};
}

ModP ModP::operator-(const ModP& o) const {
  check_mod(p, o.p);
  ModP r;
  r.p = p;
  r.v = v >= o.v ? v - o.v : v + p - o.v;
  return r;
}

ModP ModP::operator*(const ModP& o) const {
  check_mod(p, o.p);
  ModP r;
  r.p = p;
  r.v = static_cast<std::uint64_t>((u128)v * o.v % p);
  return r;
}

ModP ModP::operator/(const ModP& o) const { return *this * o.inverse(); }

ModP ModP::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  ModP base = *this, r;
  r.p = p;
  r.v = 1 % p;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

ModP ModP::inverse() const {
  if (v == 0) throw std::domain_error("inverse of zero in GF(p)");
  // Fermat; p is prime by construction of the callers.
  ModP base = *this, r;
  r.p = p;
  r.v = 1;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % d == 0) return p == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) { return (std::uint64_t)((u128)a * b % p); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---- FieldScalar

FieldScalar FieldScalar::rational(long num, long den) { return FieldScalar(Rational(num, den)); }

FieldScalar FieldScalar::modp(std::int64_t x, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  return FieldScalar(ModP(x, p));
}

void FieldScalar::check_same(const FieldScalar& o) const {
  if (val_.index() != o.val_.index()) throw std::invalid_argument("mixed field operands");
  if (!is_rational()) check_mod(as_modp().p, o.as_modp().p);
}

FieldScalar FieldScalar::zero() const {
  if (is_rational()) return FieldScalar(Rational(0));
  return FieldScalar(ModP(0, as_modp().p));
}

FieldScalar FieldScalar::one() const {
  if (is_rational()) return FieldScalar(Rational(1));
  return FieldScalar(ModP(1, as_modp().p));
}

bool FieldScalar::is_zero() const {
  if (is_rational()) return sgn(as_rational()) == 0;
  return as_modp().v == 0;
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  if (is_rational()) return FieldScalar(Rational(as_rational() + o.as_rational()));
  return FieldScalar(as_modp() + o.as_modp());
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  check_same(o);
  if (is_rational()) return FieldScalar(Rational(as_rational() - o.as_rational()));
  return FieldScalar(as_modp() - o.as_modp());
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  if (is_rational()) return FieldScalar(Rational(as_rational() * o.as_rational()));
  return FieldScalar(as_modp() * o.as_modp());
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

FieldScalar FieldScalar::operator-() const { return zero() - *this; }

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (val_.index() != o.val_.index()) return false;
  if (is_rational()) return as_rational() == o.as_rational();
  return as_modp() == o.as_modp();
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return FieldScalar(Rational(1 / as_rational()));
  return FieldScalar(as_modp().inverse());
}

FieldScalar FieldScalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FieldScalar r = one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string FieldScalar::str() const {
  if (is_rational()) return as_rational().get_str();
  return std::to_string(as_modp().v) + " mod " + std::to_string(as_modp().p);
}

// ---- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int e, const mpz_class& c) {
  LaurentPoly r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

mpz_class LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r += o;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  return r -= o;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    int e = it->first;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::map<std::string, std::string> LaurentPoly::to_string_map() const {
  std::map<std::string, std::string> m;
  for (const auto& [e, c] : terms_) m[std::to_string(e)] = c.get_str();
  return m;
}

LaurentPoly LaurentPoly::from_string_map(const std::map<std::string, std::string>& m) {
  LaurentPoly r;
  for (const auto& [k, v] : m) r.add_term(std::stoi(k), mpz_class(v));
  return r;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

namespace {

FieldScalar embed(const mpz_class& c, const FieldScalar& like) {
  if (like.is_rational()) return FieldScalar(Rational(c));
  std::uint64_t p = like.as_modp().p;
  mpz_class r = c % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return FieldScalar(ModP(static_cast<std::int64_t>(r.get_ui()), p));
}

}  // namespace

FieldScalar lp_eval(const LaurentPoly& a, const FieldScalar& q0) {
  if (q0.is_zero()) throw std::domain_error("evaluation point must be invertible");
  FieldScalar acc = q0.zero();
  for (const auto& [e, c] : a.terms()) acc += embed(c, q0) * q0.pow(e);
  return acc;
}

}  // namespace bt
