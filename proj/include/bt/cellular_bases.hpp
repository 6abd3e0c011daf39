#pragma once

#include <vector>

#include "bt/bt_algebra.hpp"
#include "bt/tableaux.hpp"

// Defining BT_BARE_BLOCK_PERMUTATIONS builds a deliberately wrong variant: the
// block elements become bare words in the g_{B_i}, and the idempotent of blam is
// pushed to the far left of the basis elements. It exists only as a control.

namespace bt {

SetPartition A_lambda(const MultiComposition& blam);  // consecutive blocks of the component sizes
PartitionType type_of(const MultiComposition& blam);

enum class Flavor { m, n };

struct CellIndex {
  LambdaPair lam;
  LambdaTableau s, t;
};

// All (Lam, s, t) with Lam in L_n(alpha) and s, t in Std(Lam).
std::vector<CellIndex> cell_indices(int n, const PartitionType& alpha);
std::vector<CellIndex> cell_indices(const std::vector<LambdaPair>& lams);

// g*_w X, computed as (X* g_w)*.
template <class R>
Element<R> left_mul_star_gw(const Permutation& w, const Element<R>& x, const Scalars<R>& S) {
  return star(right_mul_gw(star(x), w, S));
}

// sum over the Young subgroup of the rows with weights q^l(w) or (-q)^-l(w)
template <class R>
Element<R> x_lambda(const MultiComposition& blam, const Scalars<R>& S) {
  Element<R> r(size_of(blam));
  for (auto& w : young_subgroup(rows_of(blam))) r.add(g_of(w, S), S.qpow(w.length()));
  return r;
}

template <class R>
Element<R> y_lambda(const MultiComposition& blam, const Scalars<R>& S) {
  Element<R> r(size_of(blam));
  for (auto& w : young_subgroup(rows_of(blam))) {
    int l = w.length();
    r.add(g_of(w, S), l % 2 ? -S.qpow(-l) : S.qpow(-l));
  }
  return r;
}

// EE_blam x_blam (or y_blam) written down directly.
template <class R>
Element<R> Ex_lambda(const MultiComposition& blam, Flavor f, const Scalars<R>& S) {
  const int n = size_of(blam);
  auto part = A_lambda(blam).pack();
  Element<R> r(n);
  for (auto& w : young_subgroup(rows_of(blam))) {
    int l = w.length();
    R c = f == Flavor::m ? S.qpow(l) : (l % 2 ? -S.qpow(-l) : S.qpow(-l));
    r.add({part, w.pack()}, c);
  }
  return r;
}

// X BB_w for w in the group permuting equal components of blam. X must have all
// its terms of type alpha, so the idempotent factor of BB_w is absorbed.
template <class R>
Element<R> right_mul_block(const Element<R>& x, const MultiPartition& blam, const Permutation& w, const Scalars<R>& S) {
#ifdef BT_BARE_BLOCK_PERMUTATIONS
  Element<R> r = x;
  for (int i : w.reduced_word()) r = right_mul_gw(r, block_transposition(blam, i), S);
  return r;
#else
  return right_mul_gw(x, block_permutation(blam, w), S);
#endif
}

// BB_w as an element of the algebra.
template <class R>
Element<R> bbB(const LambdaPair& lam, const Permutation& w, const Scalars<R>& S) {
  const int n = size_of(lam.blam);
#ifdef BT_BARE_BLOCK_PERMUTATIONS
  return right_mul_block(identity(n, S), lam.blam, w, S);
#else
  return right_mul_block(bbE_alpha(type_of(lam.blam), S), lam.blam, w, S);
#endif
}

template <class R>
Element<R> b_or_c(const LambdaPair& lam, Flavor f, const Scalars<R>& S) {
  Element<R> r(size_of(lam.blam));
  for (auto& w : young_subgroup(rows_of(lam.bmu))) {
    R c = (f == Flavor::n && w.length() % 2) ? -S.one : S.one;
    r.add(bbB(lam, w, S), c);
  }
  return r;
}

template <class R>
Element<R> b_mu(const LambdaPair& lam, const Scalars<R>& S) {
  return b_or_c(lam, Flavor::m, S);
}

template <class R>
Element<R> c_mu(const LambdaPair& lam, const Scalars<R>& S) {
  return b_or_c(lam, Flavor::n, S);
}

// m_st (or n_st) for row standard Lambda-tableaux s = (s|u), t = (t|v) of shape lam.
template <class R>
Element<R> cell_element(const LambdaPair& lam, const LambdaTableau& s, const LambdaTableau& t, Flavor f,
                        const Scalars<R>& S) {
  if (shape_of(s) != lam || shape_of(t) != lam) throw std::invalid_argument("tableau shape mismatch");
  const MultiPartition& blam = lam.blam;
  Permutation du = d_of(s.u), dv = d_of(t.u);
#ifdef BT_BARE_BLOCK_PERMUTATIONS
  Element<R> x = f == Flavor::m ? x_lambda(blam, S) : y_lambda(blam, S);
#else
  Element<R> x = Ex_lambda(blam, f, S);
#endif
  x = right_mul_block(x, blam, du.inverse(), S);
  Element<R> sum(x.n());
  for (auto& w : young_subgroup(rows_of(lam.bmu))) {
    R c = (f == Flavor::n && w.length() % 2) ? -S.one : S.one;
    sum.add(right_mul_block(x, blam, w, S), c);
  }
  x = right_mul_block(sum, blam, dv, S);
  x = right_mul_gw(x, d_of(t.t), S);
  x = left_mul_star_gw(d_of(s.t), x, S);
#ifdef BT_BARE_BLOCK_PERMUTATIONS
  x = mul(bbE_A(A_lambda(blam), S), x, S);
#endif
  return x;
}

template <class R>
Element<R> m_st(const LambdaPair& lam, const LambdaTableau& s, const LambdaTableau& t, const Scalars<R>& S) {
  return cell_element(lam, s, t, Flavor::m, S);
}

template <class R>
Element<R> n_st(const LambdaPair& lam, const LambdaTableau& s, const LambdaTableau& t, const Scalars<R>& S) {
  return cell_element(lam, s, t, Flavor::n, S);
}

template <class R>
Element<R> m_Lambda(const LambdaPair& lam, const Scalars<R>& S) {
  auto top = top_tableau(lam);
  return m_st(lam, top, top, S);
}

template <class R>
Element<R> n_Lambda(const LambdaPair& lam, const Scalars<R>& S) {
  auto top = top_tableau(lam);
  return n_st(lam, top, top, S);
}

// x_st = g*_{d(s)} EE_blam x_blam g_{d(t)} for s, t row standard of shape blam; y_st likewise.
template <class R>
Element<R> xy_st(const MultiComposition& blam, const MultiTableau& s, const MultiTableau& t, Flavor f,
                 const Scalars<R>& S) {
  if (shape_of(s) != blam || shape_of(t) != blam) throw std::invalid_argument("tableau shape mismatch");
  Element<R> x = right_mul_gw(Ex_lambda(blam, f, S), d_of(t), S);
  return left_mul_star_gw(d_of(s), x, S);
}

// St_i = sum over the subgroup <s_i, s_{i+1}> of (-q)^-l(w) g_w
template <class R>
Element<R> steinberg(int i, int n, const Scalars<R>& S) {
  if (i < 1 || i + 1 >= n) throw std::out_of_range("Steinberg element needs 1 <= i <= n-2");
  Element<R> r(n);
  const std::vector<std::vector<int>> words = {{}, {i}, {i + 1}, {i, i + 1}, {i + 1, i}, {i, i + 1, i}};
  for (const auto& w : words) {
    int l = static_cast<int>(w.size());
    r.add(g_of(Permutation::from_word(w, n), S), l % 2 ? -S.qpow(-l) : S.qpow(-l));
  }
  return r;
}

template <class R>
Element<R> ptl_generator(int i, int n, const Scalars<R>& S) {
  return mul(mul(gen_e(i, n, S), gen_e(i + 1, n, S), S), steinberg(i, n, S), S);
}

}  // namespace bt
