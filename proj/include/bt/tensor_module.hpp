#pragma once

#include <cstdint>
#include <map>
#include <type_traits>
#include <vector>

#include "bt/bt_algebra.hpp"
#include "bt/cellular_bases.hpp"
#include "bt/tableaux.hpp"

namespace bt {

// v_i^s = v_{i_1}^{s_1} (x) ... (x) v_{i_n}^{s_n}. Packed: i_j - 1 in nibble j-1, s_j - 1 in nibble n+j-1.
struct TensorIndex {
  std::vector<int> i, s;  // 1-based entries
  bool operator==(const TensorIndex& o) const { return i == o.i && s == o.s; }
};

using TensorKey = std::uint64_t;
template <class R>
using TensorVector = std::map<TensorKey, R>;

TensorKey pack_index(const TensorIndex& x);
TensorIndex unpack_index(TensorKey k, int n);
std::uint64_t s_partition_code(TensorKey k, int n);  // packed A_s

// All basis vectors with i in [N]^n and s in [r]^n.
std::vector<TensorKey> tensor_basis(int n, int N, int r);
// Basis of EE_alpha V^(x)n with r = length(alpha): those whose A_s has type alpha.
std::vector<TensorKey> tensor_basis_alpha(const PartitionType& alpha, int N);

// (i^t, s^t): row numbers and component numbers of the entries of t.
TensorIndex v_from_tableau(const MultiTableau& t, int N);

namespace detail {
inline int tnib(TensorKey k, int pos) { return static_cast<int>((k >> (4 * pos)) & 0xF); }
inline TensorKey swap_slots(TensorKey k, int n, int a) {  // 0-based slots a, a+1
  for (int off : {0, n}) {
    TensorKey x = (k >> (4 * (off + a))) & 0xF, y = (k >> (4 * (off + a + 1))) & 0xF;
    k &= ~((TensorKey{0xF} << (4 * (off + a))) | (TensorKey{0xF} << (4 * (off + a + 1))));
    k |= (y << (4 * (off + a))) | (x << (4 * (off + a + 1)));
  }
  return k;
}
template <class R>
void tadd(TensorVector<R>& v, TensorKey k, const std::type_identity_t<R>& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}
}  // namespace detail

// E at slots i, i+1: keeps v exactly when s_i = s_{i+1}.
template <class R>
TensorVector<R> act_E(const TensorVector<R>& v, int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index");
  TensorVector<R> r;
  for (const auto& [k, c] : v)
    if (detail::tnib(k, n + i - 1) == detail::tnib(k, n + i)) r.emplace(k, c);
  return r;
}

// G at slots i, i+1.
template <class R>
TensorVector<R> act_G(const TensorVector<R>& v, int i, int n, const Scalars<R>& S) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index");
  TensorVector<R> r;
  for (const auto& [k, c] : v) {
    int a = detail::tnib(k, i - 1), b = detail::tnib(k, i);
    bool same = detail::tnib(k, n + i - 1) == detail::tnib(k, n + i);
    TensorKey sw = detail::swap_slots(k, n, i - 1);
    if (!same || a < b) {
      detail::tadd(r, sw, c);
    } else if (a == b) {
      detail::tadd(r, k, c * S.q);
    } else {
      detail::tadd(r, k, c * S.qd());
      detail::tadd(r, sw, c);
    }
  }
  return r;
}

template <class R>
TensorVector<R> act_gw(TensorVector<R> v, const Permutation& w, const Scalars<R>& S) {
  for (int i : w.reduced_word()) v = act_G(v, i, w.size(), S);
  return v;
}

// v (EE_A g_w) = [A_s = A] v g_w
template <class R>
TensorVector<R> act_element(const TensorVector<R>& v, const Element<R>& a, const Scalars<R>& S) {
  const int n = a.n();
  std::map<std::uint64_t, TensorVector<R>> by_part;
  for (const auto& [k, c] : v) detail::tadd(by_part[s_partition_code(k, n)], k, c);
  TensorVector<R> r;
  for (const auto& [key, c] : a.terms()) {
    auto it = by_part.find(key.part);
    if (it == by_part.end()) continue;
    for (const auto& [k, x] : act_gw(it->second, Permutation::unpack(key.perm, n), S)) detail::tadd(r, k, x * c);
  }
  return r;
}

template <class R>
TensorVector<R> basis_vector(TensorKey k, const Scalars<R>& S) {
  return {{k, S.one}};
}

// ---- the permutation module M(blam), basis x_s = EE_blam x_blam g_{d(s)}, s row standard

template <class R>
using MVector = std::map<MultiTableau, R>;

template <class R>
void madd(std::map<MultiTableau, R>& v, const MultiTableau& k, const std::type_identity_t<R>& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

template <class R>
MVector<R> mlambda_act_g(const MVector<R>& x, int i, const Scalars<R>& S) {
  MVector<R> r;
  for (const auto& [s, c] : x) {
    auto pos = positions(s);
    const Position &a = pos[i - 1], &b = pos[i];
    MultiTableau sw = act_entries(s, Permutation::simple(i, static_cast<int>(pos.size())));
    if (a.p != b.p || a.r < b.r) {
      madd(r, sw, c);
    } else if (a.r == b.r) {
      madd(r, s, c * S.q);
    } else {
      madd(r, s, c * S.qd());
      madd(r, sw, c);
    }
  }
  return r;
}

template <class R>
MVector<R> mlambda_act_e(const MVector<R>& x, int i) {
  MVector<R> r;
  for (const auto& [s, c] : x) {
    auto pos = positions(s);
    if (pos[i - 1].p == pos[i].p) r.emplace(s, c);
  }
  return r;
}

template <class R>
Element<R> x_s(const MultiComposition& blam, const MultiTableau& s, const Scalars<R>& S) {
  return xy_st(blam, initial_multitableau(blam), s, Flavor::m, S);
}

// Coordinates of an element of M(blam) in the basis {x_s}; throws if it is not in M(blam).
template <class R>
MVector<R> mlambda_coordinates(const Element<R>& a, const MultiComposition& blam, const Scalars<R>& S) {
  MVector<R> coords;
  const auto part = A_lambda(blam).pack();
  Element<R> rebuilt(a.n());
  for (const auto& s : enumerate_rstd(blam)) {
    R c = a.coeff({part, d_of(s).pack()}, S.zero);
    if (is_zero(c)) continue;
    coords.emplace(s, c);
    rebuilt.add(x_s(blam, s, S), c);
  }
  if (rebuilt != a) throw std::domain_error("element is not in M(blam)");
  return coords;
}

template <class R>
TensorVector<R> iota_lambda(const MVector<R>& x, int N) {
  TensorVector<R> r;
  for (const auto& [s, c] : x) detail::tadd(r, pack_index(v_from_tableau(s, N)), c);
  return r;
}

// ---- the permutation module M(Lam), basis m_s = m_{t^Lam s}, s in RStd(Lam)

template <class R>
using LVector = std::map<LambdaTableau, R>;

template <class R>
void ladd(LVector<R>& v, const LambdaTableau& k, const std::type_identity_t<R>& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

template <class R>
LVector<R> mLambda_act_g(const LVector<R>& x, int i, const LambdaPair& lam, const Scalars<R>& S) {
  LVector<R> r;
  for (const auto& [es, c] : x) {
    auto pos = positions(es.t);
    const Position &a = pos[i - 1], &b = pos[i];
    LambdaTableau moved = tableau_dot_si(es, i, lam);
    if (a.p != b.p || a.r < b.r) {
      ladd(r, moved, c);
    } else if (a.r == b.r) {
      ladd(r, moved, c * S.q);
    } else {
      ladd(r, es, c * S.qd());
      ladd(r, moved, c);
    }
  }
  return r;
}

template <class R>
LVector<R> mLambda_act_e(const LVector<R>& x, int i) {
  LVector<R> r;
  for (const auto& [es, c] : x) {
    auto pos = positions(es.t);
    if (pos[i - 1].p == pos[i].p) r.emplace(es, c);
  }
  return r;
}

template <class R>
Element<R> m_s(const LambdaPair& lam, const LambdaTableau& es, const Scalars<R>& S) {
  return m_st(lam, top_tableau(lam), es, S);
}

// The key (A_blam, B_{d(u)} d(s)) occurs in m_s with coefficient 1 and in no other basis element.
template <class R>
LVector<R> mLambda_coordinates(const Element<R>& a, const LambdaPair& lam, const Scalars<R>& S) {
  LVector<R> coords;
  const auto part = A_lambda(lam.blam).pack();
  Element<R> rebuilt(a.n());
  for (const auto& es : enumerate_rstd_Lambda(lam)) {
    Permutation w = block_permutation(lam.blam, d_of(es.u)) * d_of(es.t);
    R c = a.coeff({part, w.pack()}, S.zero);
    if (is_zero(c)) continue;
    coords.emplace(es, c);
    rebuilt.add(m_s(lam, es, S), c);
  }
  if (rebuilt != a) throw std::domain_error("element is not in M(Lambda)");
  return coords;
}

// The form with {m_s} orthonormal.
template <class R>
R bilinear_form(const LVector<R>& a, const LVector<R>& b, const Scalars<R>& S) {
  R acc = S.zero;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    if (it != b.end()) acc += c * it->second;
  }
  return acc;
}

// (m_t n_{t' s'}, m_s) for s, t in Std(Lam).
template <class R>
R crucial_pairing(const LambdaPair& lam, const LambdaTableau& s, const LambdaTableau& t, const Scalars<R>& S) {
  LambdaPair lc = conjugate(lam);
  Element<R> prod = mul(m_s(lam, t, S), n_st(lc, conjugate(t), conjugate(s), S), S);
  auto coords = mLambda_coordinates(prod, lam, S);
  auto it = coords.find(s);
  return it == coords.end() ? S.zero : it->second;
}

// (m_{t_Lam} y_{blam'} c_{bmu'}, m_{t_Lam}), which depends on Lam only.
template <class R>
R reduced_pairing(const LambdaPair& lam, const Scalars<R>& S) {
  LambdaPair lc = conjugate(lam);
  LambdaTableau bottom = bottom_tableau(lam);
  Element<R> prod = mul(mul(m_s(lam, bottom, S), y_lambda(lc.blam, S), S), c_mu(lc, S), S);
  auto coords = mLambda_coordinates(prod, lam, S);
  auto it = coords.find(bottom);
  return it == coords.end() ? S.zero : it->second;
}

}  // namespace bt
