#include "bt/bt_algebra.hpp"

#include <mutex>

namespace bt {

Scalars<LaurentPoly> symbolic() {
  return {LaurentPoly(), LaurentPoly(1), LaurentPoly::q(1), LaurentPoly::q(-1),
          [](const mpz_class& c) { return LaurentPoly::monomial(0, c); }};
}

Scalars<ModP> at_modp(std::int64_t q0, std::uint64_t p) {
  ModP q(q0, p);
  if (q.v == 0) throw std::domain_error("q0 must be invertible");
  return {ModP(0, p), ModP(1, p), q, q.inverse(), [p](const mpz_class& c) {
            mpz_class m = c % mpz_class(static_cast<unsigned long>(p));
            if (m < 0) m += static_cast<unsigned long>(p);
            return ModP(static_cast<std::int64_t>(m.get_ui()), p);
          }};
}

Scalars<Rational> at_rational(const Rational& q0) {
  if (sgn(q0) == 0) throw std::domain_error("q0 must be invertible");
  Rational inv = 1 / q0;
  inv.canonicalize();
  return {Rational(0), Rational(1), q0, inv, [](const mpz_class& c) { return Rational(c); }};
}

Scalars<FieldScalar> at_field(const FieldScalar& q0) {
  if (q0.is_zero()) throw std::domain_error("q0 must be invertible");
  FieldScalar one = q0.one();
  return {q0.zero(), one, q0, q0.inverse(), [q0](const mpz_class& c) -> FieldScalar {
            if (q0.is_rational()) return FieldScalar(Rational(c));
            std::uint64_t p = q0.characteristic();
            mpz_class m = c % mpz_class(static_cast<unsigned long>(p));
            if (m < 0) m += static_cast<unsigned long>(p);
            return FieldScalar(ModP(static_cast<std::int64_t>(m.get_ui()), p));
          }};
}

BasisKey make_key(const SetPartition& a, const Permutation& w) {
  if (a.size() != w.size()) throw std::invalid_argument("size mismatch");
  return {a.pack(), w.pack()};
}

SetPartition key_partition(const BasisKey& k, int n) { return SetPartition::unpack(k.part, n); }
Permutation key_permutation(const BasisKey& k, int n) { return Permutation::unpack(k.perm, n); }

namespace detail {

std::uint64_t merge_blocks(std::uint64_t part, int n, int a, int b) {
  std::vector<int> l(n);
  for (int k = 0; k < n; ++k) l[k] = nib(part, k);
  int from = l[b], to = l[a];
  for (int& x : l)
    if (x == from) x = to;
  return SetPartition::from_labels(l).pack();
}

std::uint64_t act_code(std::uint64_t part, std::uint64_t perm, int n) {
  std::vector<int> l(n);
  for (int k = 0; k < n; ++k) l[nib(perm, k)] = nib(part, k);
  return SetPartition::from_labels(l).pack();
}

namespace {
std::mutex cache_mutex;
}

const std::vector<std::uint64_t>& all_partition_codes(int n) {
  static std::map<int, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> codes;
  for (auto& a : enumerate_set_partitions(n)) codes.push_back(a.pack());
  return cache.emplace(n, std::move(codes)).first->second;
}

const std::vector<std::uint64_t>& coarsening_codes(std::uint64_t part, int n) {
  static std::map<std::pair<std::uint64_t, int>, std::vector<std::uint64_t>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(part, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> codes;
  for (auto& b : coarsenings(SetPartition::unpack(part, n))) codes.push_back(b.pack());
  return cache.emplace(key, std::move(codes)).first->second;
}

}  // namespace detail

std::vector<BasisKey> alpha_basis(const PartitionType& alpha) {
  int n = 0;
  for (int x : alpha) n += x;
  std::vector<BasisKey> out;
  for (auto& a : enumerate_of_type(alpha))
    for (auto& w : all_permutations(n)) out.push_back(make_key(a, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisKey> full_basis(int n) {
  std::vector<BasisKey> out;
  for (auto& a : enumerate_set_partitions(n))
    for (auto& w : all_permutations(n)) out.push_back(make_key(a, w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bt
