#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "bt/tableaux.hpp"

using namespace bt;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// all multipartitions with r components of n (components may be empty)
std::vector<MultiPartition> multipartitions(int n, int r) {
  std::vector<MultiPartition> out;
  MultiPartition cur;
  std::function<void(int, int)> rec = [&](int k, int rest) {
    if (k == r) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int m = 0; m <= rest; ++m) {
      std::vector<Partition> ps = m == 0 ? std::vector<Partition>{Partition{}} : integer_partitions(m);
      for (auto& p : ps) {
        cur.push_back(p);
        rec(k + 1, rest - m);
        cur.pop_back();
      }
    }
  };
  rec(0, n);
  return out;
}

LambdaTableau act_word(LambdaTableau x, const std::vector<int>& word, const LambdaPair& lam) {
  for (int i : word) x = tableau_dot_si(x, i, lam);
  return x;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_std({{2, 1}}).size() == 2);
  CHECK(enumerate_rstd({{2, 2}}).size() == 6);
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : integer_partitions(n)) {
      CHECK(static_cast<long>(enumerate_std({lam}).size()) == count_std({lam}));
      long multinomial = factorial(n);
      for (int part : lam) multinomial /= factorial(part);
      CHECK(static_cast<long>(enumerate_rstd({lam}).size()) == multinomial);
    }
  for (auto& b : multipartitions(4, 2)) CHECK(static_cast<long>(enumerate_std(b).size()) == count_std(b));
}

TEST_CASE("initial and column tableaux are extremal") {
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : integer_partitions(n)) {
      MultiComposition b{lam};
      auto top = initial_multitableau(b), bottom = column_multitableau(b);
      for (auto& s : enumerate_rstd(b)) {
        CHECK(dominance_multitableau(s, top));
        CHECK(dominance_multitableau(s, s));
      }
      for (auto& s : enumerate_std(b)) CHECK(dominance_multitableau(bottom, s));
    }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(MultiPartition{{3, 3}, {3, 1}, {1, 1, 1}}) == MultiPartition{{2, 2, 2}, {2, 1, 1}, {3}});
  CHECK_THROWS(conjugate(Partition{1, 2}));
  for (int n = 1; n <= 4; ++n)
    for (auto& b : multipartitions(n, 2)) {
      auto std_b = enumerate_std(b);
      for (auto& s : std_b) {
        CHECK(conjugate(conjugate(s)) == s);
        CHECK(is_standard(conjugate(s)));
        for (auto& t : std_b)
          CHECK(dominance_multitableau(s, t) == dominance_multitableau(conjugate(t), conjugate(s)));
      }
    }
  for (auto alpha : integer_partitions(4))
    for (auto& lam : enumerate_L(4, alpha)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("positions, initial kind and norms") {
  MultiTableau t = {{{1, 2, 3}, {4, 5}}, {{6}, {7}, {8}}};
  MultiTableau s = {{{2, 7, 8}, {1, 4}}, {{5, 6}}, {{3}, {9}}};
  CHECK(t == initial_multitableau({{3, 2}, {1, 1, 1}}));
  CHECK(is_standard(t));
  CHECK(is_row_standard(s));
  CHECK(!is_standard(s));
  CHECK(norm(t) == Rows{{1, 2, 3, 4, 5}, {6, 7, 8}});
  CHECK(norm(s) == Rows{{2, 7, 8, 1, 4}, {5, 6}, {3, 9}});
  CHECK(is_initial_kind(t));
  CHECK(!is_initial_kind(s));
  auto pos = positions(t);
  CHECK(pos[5].p == 2);
  CHECK(pos[4].r == 2);
  CHECK(pos[4].c == 2);
}

TEST_CASE("decompositions of multitableaux") {
  MultiTableau s = {{{2}, {6}}, {{3}, {5, 1}}, {{7}, {4}}};
  MultiComposition b = shape_of(s);
  auto dec = initial_kind_decompose(d_of(s), b);
  CHECK(dec.s0 == MultiTableau{{{1}, {2}}, {{4}, {5, 3}}, {{7}, {6}}});
  CHECK(dec.t == MultiTableau{{{2}, {6}}, {{1}, {3, 5}}, {{4}, {7}}});
  CHECK(dec.w0 == Permutation::from_word({4, 3, 6}, 7));
  CHECK(dec.w0 * dec.d == d_of(s));

  auto rs = multicomp_decompose(d_of(s), b);
  CHECK(rs.w0 * rs.d == d_of(s));
  CHECK(is_row_standard(rs.t));

  // initial-kind input has a trivial coset part
  for (auto& w : young_subgroup(norm(b))) {
    auto d2 = initial_kind_decompose(w, b);
    CHECK(d2.d.is_identity());
    CHECK(is_initial_kind(d2.s0));
  }
}

TEST_CASE("initial kind decomposition over all of S_n") {
  for (MultiComposition b : {MultiComposition{{2, 1}, {1, 1}}, MultiComposition{{1}, {2}, {1, 1}}, MultiComposition{{3}, {1, 2}}}) {
    int n = size_of(b);
    for (auto& w : all_permutations(n)) {
      auto dec = initial_kind_decompose(w, b);
      CHECK(dec.w0 * dec.d == w);
      CHECK(length(w) == length(dec.w0) + length(dec.d));
      CHECK(is_row_standard(norm(dec.t)));
      CHECK(is_initial_kind(dec.s0));
      MultiTableau sw = multitableau_of(w, b);
      if (is_row_standard(sw)) CHECK(is_row_standard(dec.s0));
    }
  }
}

TEST_CASE("w_lambda and conjugate lengths") {
  CHECK(w_lambda({{4}}).is_identity());
  CHECK(column_multitableau({{2, 2}}) == MultiTableau{{{1, 3}, {2, 4}}});
  CHECK(w_lambda({{2, 2}}) == d_of(MultiTableau{{{1, 3}, {2, 4}}}));
  for (int n = 1; n <= 5; ++n)
    for (auto& b : multipartitions(n, 2)) {
      Permutation wl = w_lambda(b);
      for (auto& s : enumerate_std(b)) {
        MultiTableau sc = conjugate(s);
        // d(s) d(s')^-1 = w_blam
        CHECK(d_of(s) * d_of(sc).inverse() == wl);
        auto dec = initial_kind_decompose(d_of(s), b);
        auto decc = initial_kind_decompose(d_of(sc), conjugate(b));
        CHECK(dec.d == decc.d);
        CHECK(length(dec.w0) + length(decc.w0) == length(wl));
      }
    }
}

TEST_CASE("dominance of shapes after initial kind reduction") {
  // s <= s1 iff s0 <= (s1)0 whenever the coset parts agree
  for (int n = 2; n <= 4; ++n) {
    auto bs = multipartitions(n, 2);
    for (auto& b : bs)
      for (auto& b1 : bs) {
        if (norm(b) != norm(b1)) continue;
        for (auto& s : enumerate_rstd(b))
          for (auto& s1 : enumerate_rstd(b1)) {
            auto d = initial_kind_decompose(d_of(s), b);
            auto d1 = initial_kind_decompose(d_of(s1), b1);
            if (d.d != d1.d) continue;
            CHECK(dominance_multitableau(s, s1) == dominance_multitableau(d.s0, d1.s0));
          }
      }
  }
}

TEST_CASE("increasing multipartitions") {
  CHECK(partition_less({1, 1}, {2}));
  CHECK(partition_less({2}, {1, 1, 1}));
  CHECK(is_increasing({{1, 1}, {2}, {2}, {2, 1}}));
  CHECK(!is_increasing({{2}, {1, 1}}));
  // each multiset of partitions has exactly one increasing ordering
  for (auto& b : multipartitions(4, 3)) {
    bool nonempty = true;
    for (auto& c : b) nonempty = nonempty && !c.empty();
    if (!nonempty) continue;
    auto idx = std::vector<int>{0, 1, 2};
    std::set<MultiPartition> inc;
    do {
      MultiPartition p{b[idx[0]], b[idx[1]], b[idx[2]]};
      if (is_increasing(p)) inc.insert(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(inc.size() == 1);
  }
}

TEST_CASE("the poset L_n(alpha)") {
  auto l11 = enumerate_L(2, {1, 1});
  CHECK(l11.size() == 2);
  CHECK(std::count(l11.begin(), l11.end(), LambdaPair{{{1}, {1}}, {{2}}}) == 1);
  CHECK(std::count(l11.begin(), l11.end(), LambdaPair{{{1}, {1}}, {{1, 1}}}) == 1);
  auto l2 = enumerate_L(2, {2});
  CHECK(l2.size() == 2);
  CHECK(std::count(l2.begin(), l2.end(), LambdaPair{{{2}}, {{1}}}) == 1);
  CHECK(std::count(l2.begin(), l2.end(), LambdaPair{{{1, 1}}, {{1}}}) == 1);

  const long expected[] = {0, 1, 4, 30, 360, 6240};
  for (int n = 1; n <= 5; ++n) {
    long total = 0;
    for (auto& alpha : integer_partitions(n))
      for (auto& lam : enumerate_L(n, alpha)) total += count_std_Lambda(lam) * count_std_Lambda(lam);
    CHECK(total == expected[n]);
  }
}

TEST_CASE("Lambda tableaux") {
  LambdaPair lam{{{1}, {1}}, {{1, 1}}};
  CHECK(enumerate_std_Lambda(lam).size() == 1);
  for (int n = 1; n <= 5; ++n)
    for (auto& alpha : integer_partitions(n))
      for (auto& L : enumerate_L(n, alpha)) {
        auto st = enumerate_std_Lambda(L);
        CHECK(static_cast<long>(st.size()) == count_std_Lambda(L));
        long inc = 0;
        for (auto& t : enumerate_std(L.blam)) inc += is_increasing_tableau(t, L.blam);
        long u = 0;
        for (auto& t : enumerate_std(L.bmu)) u += is_initial_kind(t);
        CHECK(static_cast<long>(st.size()) == inc * u);
        for (auto& x : st) CHECK(shape_of(x) == L);
      }

  // components (1,1),(2),(2),(2,1): equal shapes must appear with increasing minima
  MultiPartition blam = {{1, 1}, {2}, {2}, {2, 1}};
  MultiTableau s = {{{1}, {8}}, {{5, 6}}, {{3, 9}}, {{2, 4}, {7}}};
  MultiTableau t = {{{1}, {8}}, {{3, 5}}, {{6, 9}}, {{2, 4}, {7}}};
  CHECK(is_row_standard(s));
  CHECK(!is_increasing_tableau(s, blam));
  CHECK(is_row_standard(t));
  CHECK(is_increasing_tableau(t, blam));
  auto [u, fixed] = make_increasing(s, blam);
  CHECK(fixed == MultiTableau{{{1}, {8}}, {{3, 9}}, {{5, 6}}, {{2, 4}, {7}}});
  CHECK(d_of(fixed) == block_permutation(blam, u) * d_of(s));
}

TEST_CASE("block permutations") {
  CHECK(block_transposition({{1}, {1}}, 1) == Permutation::simple(1, 2));
  MultiPartition big = {{1, 1}, {1, 1}, {1, 1}, {2}, {2}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {2, 1}};
  auto b1 = block_transposition(big, 1), b2 = block_transposition(big, 2);
  std::vector<int> l1(22), l2(22);
  for (int k = 0; k < 22; ++k) l1[k] = l2[k] = k + 1;
  std::swap(l1[0], l1[2]);
  std::swap(l1[1], l1[3]);
  std::swap(l2[2], l2[4]);
  std::swap(l2[3], l2[5]);
  CHECK(b1 == Permutation::from_one_line(l1));
  CHECK(b2 == Permutation::from_one_line(l2));
  CHECK((b1 * b1).is_identity());
  CHECK_THROWS(block_transposition(big, 3));
  auto a = partition_from_sizes(norm(big));
  CHECK(act(a, b1) == a);
}

TEST_CASE("action of s_i on Lambda tableaux") {
  LambdaPair lam{{{2}, {2}, {2}}, {{2, 1}}};
  LambdaTableau x{{{{1, 5}}, {{2, 6}}, {{3, 4}}}, {{{1, 2}, {3}}}};
  LambdaTableau y = tableau_dot_si(x, 1, lam);
  CHECK(y == LambdaTableau{{{{1, 6}}, {{2, 5}}, {{3, 4}}}, {{{1, 2}, {3}}}});

  LambdaTableau x2{{{{1, 5}}, {{2, 6}}, {{3, 4}}}, {{{1, 3}, {2}}}};
  LambdaTableau y2 = tableau_dot_si(x2, 2, lam);
  CHECK(y2.t == MultiTableau{{{1, 5}}, {{2, 4}}, {{3, 6}}});
  CHECK(y2.u == MultiTableau{{{1, 2}, {3}}});

  // group action: involutions, braid and commuting relations
  for (int n = 2; n <= 4; ++n)
    for (auto& alpha : integer_partitions(n))
      for (auto& L : enumerate_L(n, alpha))
        for (auto& e : enumerate_rstd_Lambda(L)) {
          for (int i = 1; i < n; ++i) {
            auto f = tableau_dot_si(e, i, L);
            CHECK(shape_of(f) == L);
            CHECK(is_increasing_tableau(f.t, L.blam));
            CHECK(is_row_standard(f.t));
            CHECK(tableau_dot_si(f, i, L) == e);
            if (i + 1 < n) CHECK(act_word(e, {i, i + 1, i}, L) == act_word(e, {i + 1, i, i + 1}, L));
            for (int j = i + 2; j < n; ++j) CHECK(act_word(e, {i, j}, L) == act_word(e, {j, i}, L));
          }
        }
}

TEST_CASE("column split") {
  auto L = enumerate_L(3, {3});
  auto split = filter_columns(L, 2);
  CHECK(split.beyond.size() == 1);
  CHECK(split.beyond[0].blam == MultiPartition{{3}});
  CHECK(filter_columns(L, 3).beyond.empty());
}

TEST_CASE("order on L_n(alpha)") {
  for (int n = 2; n <= 4; ++n)
    for (auto& alpha : integer_partitions(n)) {
      auto L = enumerate_L(n, alpha);
      for (auto& a : L) {
        CHECK(!Lambda_less(a, a));
        for (auto& b : L) {
          if (Lambda_less(a, b)) CHECK(!Lambda_less(b, a));
          for (auto& c : L)
            if (Lambda_less(a, b) && Lambda_less(b, c)) CHECK(Lambda_less(a, c));
        }
      }
    }
}
