#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "bt/coefficients.hpp"
#include "bt/set_partitions.hpp"
#include "bt/symmetric_group.hpp"

namespace bt {

// The scalars an element lives over: the generic ring or a specialisation at q0.
template <class R>
struct Scalars {
  R zero, one, q, qinv;
  std::function<R(const mpz_class&)> lift;

  R qd() const { return q - qinv; }
  R integer(long k) const { return lift(mpz_class(k)); }
  R qpow(int e) const {
    R r = one;
    const R& b = e >= 0 ? q : qinv;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) r = r * b;
    return r;
  }
};

Scalars<LaurentPoly> symbolic();
Scalars<ModP> at_modp(std::int64_t q0, std::uint64_t p);
Scalars<Rational> at_rational(const Rational& q0);
Scalars<FieldScalar> at_field(const FieldScalar& q0);

// Basis key (A, w): both packed four bits per point.
struct BasisKey {
  std::uint64_t part = 0;
  std::uint64_t perm = 0;
  auto operator<=>(const BasisKey&) const = default;
};

BasisKey make_key(const SetPartition& a, const Permutation& w);
SetPartition key_partition(const BasisKey& k, int n);
Permutation key_permutation(const BasisKey& k, int n);

namespace detail {
inline int nib(std::uint64_t c, int k) { return static_cast<int>((c >> (4 * k)) & 0xF); }
inline int pos_of_value(std::uint64_t perm, int n, int v) {
  for (int k = 0; k < n; ++k)
    if (nib(perm, k) == v) return k;
  throw std::logic_error("value not found in permutation code");
}
// w s_i : swap the (0-based) values i-1 and i.
inline std::uint64_t swap_values(std::uint64_t perm, int n, int i) {
  std::uint64_t r = perm;
  for (int k = 0; k < n; ++k) {
    int x = nib(perm, k);
    if (x == i - 1 || x == i) {
      r &= ~(std::uint64_t{0xF} << (4 * k));
      r |= static_cast<std::uint64_t>(x == i - 1 ? i : i - 1) << (4 * k);
    }
  }
  return r;
}
std::uint64_t merge_blocks(std::uint64_t part, int n, int a, int b);  // 0-based points
std::uint64_t act_code(std::uint64_t part, std::uint64_t perm, int n);  // A w
const std::vector<std::uint64_t>& all_partition_codes(int n);
const std::vector<std::uint64_t>& coarsening_codes(std::uint64_t part, int n);
}  // namespace detail

// A linear combination of basis pairs. The same container is used for the
// idempotent basis {EE_A g_w} (the working normal form) and for {E_A g_w}.
template <class R>
class Element {
 public:
  Element() = default;
  explicit Element(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<BasisKey, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const BasisKey& k, const R& c) {
    if (bt::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (bt::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const Element& o, const R& c) {
    check(o);
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }
  R coeff(const BasisKey& k, const R& zero) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? zero : it->second;
  }

  Element operator+(const Element& o) const {
    check(o);
    Element r = *this;
    for (const auto& [k, v] : o.terms_) r.add(k, v);
    return r;
  }
  Element operator-(const Element& o) const {
    check(o);
    Element r = *this;
    for (const auto& [k, v] : o.terms_) r.add(k, -v);
    return r;
  }
  Element scaled(const R& c) const {
    Element r(n_);
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
  }
  bool operator==(const Element& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  void check(const Element& o) const {
    if (n_ != o.n_) throw std::invalid_argument("elements of different rank");
  }
  int n_ = 0;
  std::map<BasisKey, R> terms_;
};

// ---- multiplication in the idempotent basis

// (EE_A g_w) g_i = EE_A g_{w s_i} when the length grows; otherwise an extra
// (q - q^-1) EE_A g_w appears when i w^-1 and (i+1) w^-1 share a block of A.
template <class R>
Element<R> right_mul_g(const Element<R>& a, int i, const Scalars<R>& S) {
  const int n = a.n();
  if (i < 1 || i >= n) throw std::out_of_range("generator index");
  Element<R> r(n);
  const R qd = S.qd();
  for (const auto& [k, c] : a.terms()) {
    int pa = detail::pos_of_value(k.perm, n, i - 1);
    int pb = detail::pos_of_value(k.perm, n, i);
    r.add({k.part, detail::swap_values(k.perm, n, i)}, c);
    if (pa > pb && detail::nib(k.part, pa) == detail::nib(k.part, pb)) r.add(k, c * qd);
  }
  return r;
}

template <class R>
Element<R> right_mul_e(const Element<R>& a, int i) {
  const int n = a.n();
  if (i < 1 || i >= n) throw std::out_of_range("generator index");
  Element<R> r(n);
  for (const auto& [k, c] : a.terms()) {
    int pa = detail::pos_of_value(k.perm, n, i - 1);
    int pb = detail::pos_of_value(k.perm, n, i);
    if (detail::nib(k.part, pa) == detail::nib(k.part, pb)) r.add(k, c);
  }
  return r;
}

template <class R>
Element<R> right_mul_gw(Element<R> a, const Permutation& w, const Scalars<R>& S) {
  for (int i : w.reduced_word()) a = right_mul_g(a, i, S);
  return a;
}

// (EE_A g_w)(EE_B g_v) = [B = A w] EE_A g_w g_v.
template <class R>
Element<R> mul(const Element<R>& a, const Element<R>& b, const Scalars<R>& S) {
  if (a.n() != b.n()) throw std::invalid_argument("elements of different rank");
  const int n = a.n();
  std::map<std::uint64_t, Element<R>> by_target;
  for (const auto& [k, c] : a.terms()) {
    auto [it, fresh] = by_target.try_emplace(detail::act_code(k.part, k.perm, n), Element<R>(n));
    it->second.add(k, c);
  }
  std::map<std::uint64_t, Element<R>> by_perm;
  for (const auto& [k, c] : b.terms()) {
    auto it = by_target.find(k.part);
    if (it == by_target.end()) continue;
    auto [jt, fresh] = by_perm.try_emplace(k.perm, Element<R>(n));
    jt->second.add(it->second, c);
  }
  Element<R> r(n);
  for (const auto& [v, part] : by_perm) r.add(right_mul_gw(part, Permutation::unpack(v, n), S), S.one);
  return r;
}

// (EE_A g_w)* = EE_{A w} g_{w^-1}
template <class R>
Element<R> star(const Element<R>& a) {
  const int n = a.n();
  Element<R> r(n);
  for (const auto& [k, c] : a.terms()) {
    Permutation w = Permutation::unpack(k.perm, n);
    r.add({detail::act_code(k.part, k.perm, n), w.inverse().pack()}, c);
  }
  return r;
}

template <class R>
Element<R> left_mul_g(int i, const Element<R>& a, const Scalars<R>& S) {
  return star(right_mul_g(star(a), i, S));
}

template <class R>
Element<R> left_mul_e(int i, const Element<R>& a) {
  return star(right_mul_e(star(a), i));
}

// ---- distinguished elements

template <class R>
Element<R> bbE_A(const SetPartition& a, const Scalars<R>& S) {
  Element<R> r(a.size());
  r.add({a.pack(), Permutation(a.size()).pack()}, S.one);
  return r;
}

// sum_A EE_A g_w
template <class R>
Element<R> g_of(const Permutation& w, const Scalars<R>& S) {
  const int n = w.size();
  Element<R> r(n);
  for (auto code : detail::all_partition_codes(n)) r.add({code, w.pack()}, S.one);
  return r;
}

template <class R>
Element<R> identity(int n, const Scalars<R>& S) {
  return g_of(Permutation(n), S);
}

template <class R>
Element<R> gen_g(int i, int n, const Scalars<R>& S) {
  return g_of(Permutation::simple(i, n), S);
}

// E_A = sum_{B coarser than A} EE_B
template <class R>
Element<R> E_A(const SetPartition& a, const Scalars<R>& S) {
  const int n = a.size();
  Element<R> r(n);
  auto id = Permutation(n).pack();
  for (auto code : detail::coarsening_codes(a.pack(), n)) r.add({code, id}, S.one);
  return r;
}

template <class R>
Element<R> gen_e(int i, int n, const Scalars<R>& S) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index");
  return E_A(pair_partition(i, n), S);
}

// g_i^-1 = g_i + (q^-1 - q) e_i
template <class R>
Element<R> gen_g_inv(int i, int n, const Scalars<R>& S) {
  Element<R> r = gen_g(i, n, S);
  r.add(gen_e(i, n, S), S.qinv - S.q);
  return r;
}

// E_ij via E_{i,i+1} = e_i and E_ij = g_i E_{i+1,j} g_i^-1.
template <class R>
Element<R> E_ij(int i, int j, int n, const Scalars<R>& S) {
  if (i < 1 || j > n || i >= j) throw std::out_of_range("E_ij needs 1 <= i < j <= n");
  if (j == i + 1) return gen_e(i, n, S);
  Element<R> inner = E_ij(i + 1, j, n, S);
  return mul(mul(gen_g(i, n, S), inner, S), gen_g_inv(i, n, S), S);
}

template <class R>
Element<R> bbE_alpha(const PartitionType& alpha, const Scalars<R>& S) {
  int n = 0;
  for (int x : alpha) n += x;
  Element<R> r(n);
  auto id = Permutation(n).pack();
  for (auto& a : enumerate_of_type(alpha)) r.add({a.pack(), id}, S.one);
  return r;
}

template <class R>
Element<R> project_alpha(const Element<R>& a, const PartitionType& alpha) {
  PartitionType sorted = alpha;
  std::sort(sorted.rbegin(), sorted.rend());
  Element<R> r(a.n());
  for (const auto& [k, c] : a.terms())
    if (type_of(SetPartition::unpack(k.part, a.n())) == sorted) r.add(k, c);
  return r;
}

// Basis {EE_A g_w : A of type alpha} of the block with identity EE_alpha.
std::vector<BasisKey> alpha_basis(const PartitionType& alpha);
std::vector<BasisKey> full_basis(int n);

template <class R, class F>
Element<R> map_coefficients(const Element<LaurentPoly>& a, F f) {
  Element<R> r(a.n());
  for (const auto& [k, c] : a.terms()) r.add(k, f(c));
  return r;
}

template <class R>
R evaluate(const LaurentPoly& p, const Scalars<R>& S) {
  R acc = S.zero;
  for (const auto& [e, c] : p.terms()) acc += S.qpow(e) * S.lift(c);
  return acc;
}

template <class R>
Element<R> specialize(const Element<LaurentPoly>& a, const Scalars<R>& S) {
  return map_coefficients<R>(a, [&](const LaurentPoly& p) { return evaluate(p, S); });
}

// ---- the E-basis {E_A g_w}

// EE_A = sum_{A <= B} mu(A, B) E_B
template <class R>
Element<R> to_E_basis(const Element<R>& a, const Scalars<R>& S) {
  const int n = a.n();
  Element<R> r(n);
  for (const auto& [k, c] : a.terms()) {
    SetPartition A = SetPartition::unpack(k.part, n);
    for (auto code : detail::coarsening_codes(k.part, n))
      r.add({code, k.perm}, c * S.integer(moebius(A, SetPartition::unpack(code, n))));
  }
  return r;
}

template <class R>
Element<R> from_E_basis(const Element<R>& a) {
  const int n = a.n();
  Element<R> r(n);
  for (const auto& [k, c] : a.terms())
    for (auto code : detail::coarsening_codes(k.part, n)) r.add({code, k.perm}, c);
  return r;
}

// Multiplication directly on E-basis coordinates by the rewriting rules
//   (E_A g_w) e_i = E_{A v P_i w^-1} g_w,
//   (E_A g_w) g_i = E_A g_{w s_i}                               if l(w s_i) > l(w),
//                 = E_A g_{w s_i} + (q - q^-1) E_{A v P_i (w s_i)^-1} g_w   otherwise.
// Kept independent of the idempotent-basis code so the two can check each other.
template <class R>
Element<R> ebasis_right_mul_g(const Element<R>& a, int i, const Scalars<R>& S) {
  const int n = a.n();
  Element<R> r(n);
  const R qd = S.qd();
  for (const auto& [k, c] : a.terms()) {
    int pa = detail::pos_of_value(k.perm, n, i - 1);
    int pb = detail::pos_of_value(k.perm, n, i);
    r.add({k.part, detail::swap_values(k.perm, n, i)}, c);
    if (pa > pb) r.add({detail::merge_blocks(k.part, n, pa, pb), k.perm}, c * qd);
  }
  return r;
}

template <class R>
Element<R> ebasis_right_mul_e(const Element<R>& a, int i) {
  const int n = a.n();
  Element<R> r(n);
  for (const auto& [k, c] : a.terms()) {
    int pa = detail::pos_of_value(k.perm, n, i - 1);
    int pb = detail::pos_of_value(k.perm, n, i);
    r.add({detail::merge_blocks(k.part, n, pa, pb), k.perm}, c);
  }
  return r;
}

// (E_A g_w)(E_B g_v) = E_{A v B w^-1} g_w g_v
template <class R>
Element<R> ebasis_mul(const Element<R>& a, const Element<R>& b, const Scalars<R>& S) {
  const int n = a.n();
  Element<R> r(n);
  for (const auto& [kb, cb] : b.terms()) {
    Permutation v = Permutation::unpack(kb.perm, n);
    auto word = v.reduced_word();
    SetPartition B = SetPartition::unpack(kb.part, n);
    for (const auto& [ka, ca] : a.terms()) {
      Permutation w = Permutation::unpack(ka.perm, n);
      SetPartition C = join(SetPartition::unpack(ka.part, n), act(B, w.inverse()));
      Element<R> t(n);
      t.add({C.pack(), ka.perm}, ca * cb);
      for (int i : word) t = ebasis_right_mul_g(t, i, S);
      r.add(t, S.one);
    }
  }
  return r;
}

}  // namespace bt
