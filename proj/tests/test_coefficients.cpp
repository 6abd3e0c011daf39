#include <random>

#include "doctest.h"
#include "bt/coefficients.hpp"

using namespace bt;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::q(e); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), coef(-5, 5), len(0, 4);
  LaurentPoly p;
  for (int k = len(rng); k > 0; --k) p += LaurentPoly::monomial(deg(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent addition") {
  CHECK((q() + (-q())).is_zero());
  CHECK(lp_add(q() - q(-1), q(-1)) == q());
  CHECK(lp_add(LaurentPoly(1) + q(2), q(2)) == LaurentPoly(1) + LaurentPoly::monomial(2, 2));
}

TEST_CASE("laurent multiplication") {
  CHECK(lp_mul(q(), q(-1)) == LaurentPoly(1));
  CHECK(lp_mul(q() - q(-1), q() + q(-1)) == q(2) - q(-2));
  LaurentPoly sq = lp_mul(q() - q(-1), q() - q(-1));
  CHECK(sq == q(2) - LaurentPoly(2) + q(-2));
  // cross-check by evaluation at q = 2 against plain rationals: (2 - 1/2)^2 = 9/4
  CHECK(lp_eval(sq, FieldScalar::rational(2)) == FieldScalar::rational(9, 4));
  CHECK(sq.str() == "q^2 - 2 + q^-2");
}

TEST_CASE("evaluation") {
  CHECK(lp_eval(q() - q(-1), FieldScalar::rational(1)).is_zero());
  CHECK(lp_eval(q(2) + LaurentPoly(1), FieldScalar::rational(2)) == FieldScalar::rational(5));
  // 3 * 5 = 15 = 1 mod 7
  CHECK(lp_eval(q(-1), FieldScalar::modp(3, 7)) == FieldScalar::modp(5, 7));
  CHECK_THROWS_AS(lp_eval(q(), FieldScalar::rational(0)), std::domain_error);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  const FieldScalar points[] = {FieldScalar::rational(2), FieldScalar::rational(5, 7),
                                FieldScalar::modp(3, 1000000007), FieldScalar::modp(11, 101)};
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    const FieldScalar& x = points[trial % 4];
    CHECK(lp_eval(a * b, x) == lp_eval(a, x) * lp_eval(b, x));
    CHECK(lp_eval(a + b, x) == lp_eval(a, x) + lp_eval(b, x));
  }
}

TEST_CASE("ring axioms and canonical form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    LaurentPoly d = a * b - c;
    for (const auto& [e, coef] : d.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("json map round trip") {
  LaurentPoly p = q() - q(-1);
  auto m = p.to_string_map();
  CHECK(m.size() == 2);
  CHECK(m.at("-1") == "-1");
  CHECK(m.at("1") == "1");
  CHECK(LaurentPoly::from_string_map(m) == p);
}

TEST_CASE("prime field") {
  ModP a(3, 7);
  CHECK((a * a.inverse()).v == 1);
  CHECK((ModP(-1, 7)).v == 6);
  CHECK(a.pow(6).v == 1);
  CHECK(is_prime(1000000007));
  CHECK(!is_prime(1000000007ULL * 3));
  FieldScalar x = FieldScalar::rational(5, 7);
  CHECK(x * x.inverse() == x.one());
  CHECK_THROWS(FieldScalar::rational(1) + FieldScalar::modp(1, 7));
}
