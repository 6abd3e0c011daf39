#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace bt {

// Element of GF(p), p < 2^62. The modulus travels with the value.
struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  ModP() = default;
  ModP(std::int64_t x, std::uint64_t prime);

  ModP operator+(const ModP& o) const;
  ModP operator-(const ModP& o) const;
  ModP operator*(const ModP& o) const;
  ModP operator/(const ModP& o) const;
  ModP operator-() const { return ModP{0, p} - *this; }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  bool operator==(const ModP& o) const { return v == o.v && p == o.p; }
  bool operator!=(const ModP& o) const { return !(*this == o); }

  ModP inverse() const;
  ModP pow(std::int64_t e) const;
};

using Rational = mpq_class;

bool is_prime(std::uint64_t p);

// A value in Q or in GF(p), tagged by which.
class FieldScalar {
 public:
  FieldScalar() : val_(Rational(0)) {}
  FieldScalar(Rational r) : val_(std::move(r)) { std::get<Rational>(val_).canonicalize(); }
  FieldScalar(ModP m) : val_(m) {}
  static FieldScalar rational(long num, long den = 1);
  static FieldScalar modp(std::int64_t x, std::uint64_t p);

  bool is_rational() const { return std::holds_alternative<Rational>(val_); }
  const Rational& as_rational() const { return std::get<Rational>(val_); }
  const ModP& as_modp() const { return std::get<ModP>(val_); }
  std::uint64_t characteristic() const { return is_rational() ? 0 : as_modp().p; }

  FieldScalar zero() const;
  FieldScalar one() const;
  bool is_zero() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }
  FieldScalar inverse() const;
  FieldScalar pow(std::int64_t e) const;

  std::string str() const;

 private:
  void check_same(const FieldScalar& o) const;
  std::variant<Rational, ModP> val_;
};

// Laurent polynomial in q over the integers; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // constant
  static LaurentPoly monomial(int e, const mpz_class& c = 1);
  static LaurentPoly q(int e = 1) { return monomial(e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int e) const;
  int min_degree() const;
  int max_degree() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

  LaurentPoly zero() const { return {}; }
  LaurentPoly one() const { return LaurentPoly(1); }

  // Human-readable form such as "q^2 - 2 + q^-2".
  std::string str() const;

  // {"-1": "-1", "1": "1"} style map.
  std::map<std::string, std::string> to_string_map() const;
  static LaurentPoly from_string_map(const std::map<std::string, std::string>& m);

 private:
  void add_term(int e, const mpz_class& c);
  Terms terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
// Substitute q = q0. Throws std::domain_error when q0 is zero.
FieldScalar lp_eval(const LaurentPoly& a, const FieldScalar& q0);

// Uniform helpers used by the generic containers.
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const FieldScalar& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.v == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace bt
