#include <cstdlib>
#include <random>

#include "doctest.h"
#include "bt/bt_algebra.hpp"

using namespace bt;

namespace {

using El = Element<LaurentPoly>;
const Scalars<LaurentPoly> S = symbolic();

El g(int i, int n) { return gen_g(i, n, S); }
El e(int i, int n) { return gen_e(i, n, S); }
El operator*(const El& a, const El& b) { return mul(a, b, S); }
El one(int n) { return identity(n, S); }

El random_generator_word(int n, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, n - 1), kind(0, 2);
  El r = one(n);
  for (int k = 0; k < len; ++k) {
    int i = pick(rng);
    switch (kind(rng)) {
      case 0: r = r * g(i, n); break;
      case 1: r = r * e(i, n); break;
      default: r = r * gen_g_inv(i, n, S); break;
    }
  }
  return r;
}

// random element with a few basis terms and small coefficients
El random_element(int n, std::mt19937& rng) {
  auto basis = full_basis(n);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> c(-2, 2), ex(-2, 2);
  El r(n);
  for (int k = 0; k < 4; ++k) r.add(basis[pick(rng)], LaurentPoly::monomial(ex(rng), c(rng)));
  return r;
}

}  // namespace

TEST_CASE("defining relations") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(g(i, n) * e(i, n) == e(i, n) * g(i, n));
      CHECK(e(i, n) * e(i, n) == e(i, n));
      El rhs = one(n);
      rhs.add(e(i, n) * g(i, n), S.qd());
      CHECK(g(i, n) * g(i, n) == rhs);
      CHECK(g(i, n) * gen_g_inv(i, n, S) == one(n));
      CHECK(gen_g_inv(i, n, S) * g(i, n) == one(n));
      for (int j = 1; j < n; ++j) {
        CHECK(e(i, n) * e(j, n) == e(j, n) * e(i, n));
        if (std::abs(i - j) > 1) {
          CHECK(g(i, n) * g(j, n) == g(j, n) * g(i, n));
          CHECK(g(i, n) * e(j, n) == e(j, n) * g(i, n));
        }
        if (std::abs(i - j) == 1) {
          CHECK(g(i, n) * g(j, n) * g(i, n) == g(j, n) * g(i, n) * g(j, n));
          CHECK(e(i, n) * g(j, n) * g(i, n) == g(j, n) * g(i, n) * e(j, n));
          El a = e(i, n) * e(j, n) * g(j, n);
          CHECK(a == e(i, n) * g(j, n) * e(i, n));
          CHECK(a == g(j, n) * e(i, n) * e(j, n));
        }
      }
    }
}

TEST_CASE("basis size and alpha blocks") {
  for (int n = 1; n <= 5; ++n) {
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<long>(full_basis(n).size()) == bell_number(n) * fact);
    std::size_t total = 0;
    for (auto& alpha : integer_partitions(n)) total += alpha_basis(alpha).size();
    CHECK(total == full_basis(n).size());
  }
  CHECK(alpha_basis({2, 1}).size() == 18);
}

TEST_CASE("set partition idempotents") {
  for (int n = 2; n <= 4; ++n) {
    auto parts = enumerate_set_partitions(n);
    El sum(n);
    for (auto& a : parts) {
      sum = sum + bbE_A(a, S);
      for (auto& b : parts) {
        El ab = bbE_A(a, S) * bbE_A(b, S);
        CHECK(ab == (a == b ? bbE_A(a, S) : El(n)));
        CHECK(E_A(a, S) * E_A(b, S) == E_A(join(a, b), S));
        CHECK(bbE_A(a, S) * E_A(b, S) == (b.finer_or_equal(a) ? bbE_A(a, S) : El(n)));
      }
      for (auto& w : all_permutations(n))
        CHECK(bbE_A(a, S) * g_of(w, S) == g_of(w, S) * bbE_A(act(a, w), S));
    }
    CHECK(sum == one(n));
    CHECK(E_A(SetPartition::singletons(n), S) == one(n));
  }
}

TEST_CASE("E_ij") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) CHECK(E_ij(i, i + 1, n, S) == e(i, n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        El eij = E_ij(i, j, n, S);
        CHECK(eij * eij == eij);
        CHECK(eij == E_A(SetPartition::from_blocks([&] {
                           std::vector<Block> bl{{i, j}};
                           for (int k = 1; k <= n; ++k)
                             if (k != i && k != j) bl.push_back({k});
                           return bl;
                         }()),
                         S));
        if (n <= 4)
          for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) CHECK(eij * E_ij(k, l, n, S) == E_ij(k, l, n, S) * eij);
      }
  }
}

TEST_CASE("central idempotents of the alpha blocks") {
  for (int n = 2; n <= 4; ++n) {
    El sum(n);
    auto alphas = integer_partitions(n);
    for (auto& alpha : alphas) {
      El ea = bbE_alpha(alpha, S);
      sum = sum + ea;
      CHECK(ea * ea == ea);
      for (int i = 1; i < n; ++i) {
        CHECK(ea * g(i, n) == g(i, n) * ea);
        CHECK(ea * e(i, n) == e(i, n) * ea);
      }
      for (auto& beta : alphas)
        if (beta != alpha) CHECK((ea * bbE_alpha(beta, S)).is_zero());
    }
    CHECK(sum == one(n));
  }
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    El a = random_element(4, rng);
    El sum(4);
    for (auto& alpha : integer_partitions(4)) {
      El p = project_alpha(a, alpha);
      CHECK(p == a * bbE_alpha(alpha, S));
      CHECK(p == bbE_alpha(alpha, S) * a);
      sum = sum + p;
    }
    CHECK(sum == a);
  }
}

TEST_CASE("star is an anti-involution fixing the generators") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(star(g(i, n)) == g(i, n));
      CHECK(star(e(i, n)) == e(i, n));
    }
    for (int t = 0; t < 30; ++t) {
      El a = random_element(n, rng), b = random_element(n, rng);
      CHECK(star(star(a)) == a);
      CHECK(star(a * b) == star(b) * star(a));
      auto all = all_permutations(n);
      const auto& u = all[rng() % all.size()];
      const auto& v = all[rng() % all.size()];
      CHECK(star(g_of(u, S) * g_of(v, S)) == g_of(v.inverse(), S) * g_of(u.inverse(), S));
    }
  }
}

TEST_CASE("star on the E-basis") {
  // (E_A g_w)* = E_{A w} g_{w^-1}, with A w the image of A under w
  for (auto& a : enumerate_set_partitions(4))
    for (auto& w : all_permutations(4)) {
      El x(4), y(4);
      x.add(make_key(a, w), S.one);
      y.add(make_key(act(a, w), w.inverse()), S.one);
      CHECK(to_E_basis(star(from_E_basis(x)), S) == y);
    }
}

TEST_CASE("products agree with the E-basis rewriting") {
  std::mt19937 rng(9);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 40; ++t) {
      El a = random_element(n, rng), b = random_element(n, rng);
      El ea = to_E_basis(a, S), eb = to_E_basis(b, S);
      CHECK(from_E_basis(ea) == a);
      CHECK(to_E_basis(a * b, S) == ebasis_mul(ea, eb, S));
      for (int i = 1; i < n; ++i) {
        CHECK(to_E_basis(right_mul_g(a, i, S), S) == ebasis_right_mul_g(ea, i, S));
        CHECK(to_E_basis(right_mul_e(a, i), S) == ebasis_right_mul_e(ea, i));
        CHECK(left_mul_g(i, a, S) == g(i, n) * a);
        CHECK(left_mul_e(i, a) == e(i, n) * a);
      }
    }
  // E_A E_B = E_{A v B} read off directly in the E-basis
  for (auto& a : enumerate_set_partitions(4))
    for (auto& b : enumerate_set_partitions(4)) {
      El ea(4), eb(4), ec(4);
      ea.add(make_key(a, Permutation(4)), S.one);
      eb.add(make_key(b, Permutation(4)), S.one);
      ec.add(make_key(join(a, b), Permutation(4)), S.one);
      CHECK(ebasis_mul(ea, eb, S) == ec);
    }
}

TEST_CASE("associativity on random generator words") {
  std::mt19937 rng(13);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + t % 4;
    El a = random_generator_word(n, 2, rng), b = random_generator_word(n, 2, rng), c = random_generator_word(n, 2, rng);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("specialisation is a homomorphism") {
  std::mt19937 rng(17);
  auto F = at_modp(2, 1000000007);
  auto Q = at_rational(Rational(5, 7));
  for (int t = 0; t < 40; ++t) {
    int n = 2 + t % 3;
    El a = random_element(n, rng), b = random_element(n, rng);
    CHECK(specialize(a * b, F) == mul(specialize(a, F), specialize(b, F), F));
    CHECK(specialize(a * b, Q) == mul(specialize(a, Q), specialize(b, Q), Q));
  }
  auto one_ = at_rational(Rational(1));
  Element<Rational> gsq = specialize(g(1, 3) * g(1, 3), one_);
  CHECK(gsq == identity(3, one_));
  for (auto& a : enumerate_set_partitions(3)) {
    auto x = specialize(bbE_A(a, S), F);
    CHECK(mul(x, x, F) == x);
  }
  CHECK_THROWS(at_modp(0, 7));
  CHECK_THROWS(at_rational(Rational(0)));
}

TEST_CASE("errors") {
  CHECK_THROWS(g(0, 3));
  CHECK_THROWS(e(3, 3));
  CHECK_THROWS(E_ij(2, 2, 3, S));
  CHECK_THROWS(one(3) * one(4));
}
