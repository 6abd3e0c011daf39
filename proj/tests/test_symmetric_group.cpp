#include <random>
#include <set>
#include <algorithm>

#include "doctest.h"
#include "bt/symmetric_group.hpp"

using namespace bt;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> a(n);
  for (int k = 0; k < n; ++k) a[k] = k + 1;
  std::shuffle(a.begin(), a.end(), rng);
  return Permutation::from_one_line(a);
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  auto s1 = Permutation::simple(1, 3), s2 = Permutation::simple(2, 3);
  CHECK((s1 * s1).is_identity());
  // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  CHECK(compose(s1, s2).one_line() == std::vector<int>{3, 1, 2});
  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto w = random_perm(6, rng);
    CHECK((w * w.inverse()).is_identity());
  }
  CHECK_THROWS(s1 * Permutation(4));
}

TEST_CASE("lengths") {
  CHECK(length(Permutation(4)) == 0);
  CHECK(length(Permutation::from_one_line({3, 2, 1})) == 3);
  auto w = Permutation::from_word({2, 3, 4, 5, 4, 1}, 7);
  CHECK(length(w) == 6);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation(5)).empty());
  CHECK(reduced_word(Permutation::simple(1, 4)) == ReducedWord{1});
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    auto w = random_perm(1 + t % 7, rng);
    auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(Permutation::from_word(word, w.size()) == w);
  }
}

TEST_CASE("ascents agree with lengths") {
  for (auto& w : all_permutations(4))
    for (int i = 1; i < 4; ++i)
      CHECK(w.ascends_right(i) == (length(w * Permutation::simple(i, 4)) > length(w)));
}

TEST_CASE("parabolic decomposition on the worked example") {
  Rows s = {{2, 6}, {3, 5, 1}, {7, 4}};
  Composition lam = {2, 3, 2};
  Permutation w = d_of(s);
  auto dec = parabolic_decompose(w, lam);
  CHECK(dec.t == Rows{{2, 6}, {1, 3, 5}, {4, 7}});
  CHECK(dec.w0 == Permutation::from_word({4, 3, 6}, 7));
  CHECK(dec.d == Permutation::from_word({2, 3, 4, 5, 4, 1}, 7));
  CHECK(length(dec.d) == 6);
  // the step algorithm reaches t^lam from t with d(t)^-1
  auto seq = descent_sequence(dec.t);
  CHECK(static_cast<int>(seq.size()) == length(dec.d));
}

TEST_CASE("parabolic decomposition properties") {
  std::mt19937 rng(3);
  const std::vector<Composition> shapes = {{2, 3, 2}, {1, 1, 1, 1}, {4}, {3, 0, 2}, {2, 2, 1, 1}, {1, 5}};
  for (int t = 0; t < 200; ++t) {
    const auto& lam = shapes[t % shapes.size()];
    int n = 0;
    for (int x : lam) n += x;
    auto w = random_perm(n, rng);
    auto dec = parabolic_decompose(w, lam);
    CHECK(dec.w0 * dec.d == w);
    CHECK(in_young_subgroup(dec.w0, lam));
    CHECK(is_row_standard(dec.t));
    CHECK(length(w) == length(dec.w0) + length(dec.d));
  }
  auto w0 = Permutation::from_word({1, 3}, 5);
  auto dec = parabolic_decompose(w0, {2, 3});
  CHECK(dec.w0 == w0);
  CHECK(dec.t == initial_tableau({2, 3}));
}

TEST_CASE("coset decomposition is a bijection") {
  for (Composition lam : {Composition{2, 2}, Composition{3, 1, 1}, Composition{2, 1, 2}}) {
    int n = 0;
    for (int x : lam) n += x;
    auto sub = young_subgroup(lam);
    std::set<Rows> tabs;
    for (auto& w : all_permutations(n)) tabs.insert(parabolic_decompose(w, lam).t);
    CHECK(all_permutations(n).size() == sub.size() * tabs.size());
  }
}
