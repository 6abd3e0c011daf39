#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bt/cellular_bases.hpp"
#include "bt/linear_algebra.hpp"
#include "bt/tensor_module.hpp"

namespace bt {

// q -> q0 in GF(p), or in Q when p == 0.
struct EvalPoint {
  Rational q0;
  std::uint64_t p = 0;
  std::string str() const;
};

std::vector<EvalPoint> default_points();  // 2 mod 1e9+7, 3 mod 998244353, 5/7

// The n_st with Lam outside the column bound.
std::vector<CellIndex> predicted_annihilator(int n, int N, const PartitionType& alpha);
long predicted_dim(int n, int N, const PartitionType& alpha);

// Sum of |Std(Lam)|^2 over the Lam within the bound.
long etl_dim(int n, int N);
long etl_dim(int n, int N, const PartitionType& alpha);
long ptl_dim(int n);

// Nullity of E_n^alpha acting on EE_alpha V^(x)n with r = length(alpha), at one point.
long bruteforce_dim(const PartitionType& alpha, int N, const EvalPoint& pt);

struct BruteforceResult {
  std::vector<long> per_point;
  long dim = 0;  // minimum over the points
};
BruteforceResult bruteforce_annihilator_dim(const PartitionType& alpha, int N, const std::vector<EvalPoint>& pts);

struct AnnihilatorReport {
  int n = 0, N = 0;
  PartitionType alpha;
  long predicted = 0;
  long bruteforce = 0;
  std::vector<std::string> points;
  std::vector<long> per_point;
  bool kills = false;        // every predicted n_st kills EE_alpha V^(x)n
  bool independent = false;  // predicted elements independent at every point
  bool match = false;
};
AnnihilatorReport verify_predicted_basis(int n, int N, const PartitionType& alpha, const std::vector<EvalPoint>& pts);

// Nullity of all of E_n acting on V^(x)n with i in [N], s in [r].
long faithful_kernel_dim(int n, int N, int r, const EvalPoint& pt);

// Ranks of {m_st} and {n_st} for one alpha, in the basis coordinates and as operators
// on EE_alpha V^(x)n with N = n (where the action is faithful).
struct IndependenceReport {
  long count = 0;
  long coord_rank_m = 0, coord_rank_n = 0;
  long tensor_rank_m = 0, tensor_rank_n = 0;
  bool ok() const {
    return coord_rank_m == count && coord_rank_n == count && tensor_rank_m == count && tensor_rank_n == count;
  }
};
IndependenceReport cellular_independence(int n, const PartitionType& alpha, const EvalPoint& pt);

// Dimension of the two-sided ideal of E_n^alpha generated by EE_alpha e_i e_{i+1} St_i.
long steinberg_ideal_dim(int n, const PartitionType& alpha, int i, const EvalPoint& pt);

// ---- templated pieces

template <class R>
std::size_t rank_of(const std::vector<Element<R>>& els) {
  RowReducer<R, BasisKey> rr;
  for (const auto& e : els) rr.insert(e.terms());
  return rr.rank();
}

// v g_w for every w, built along increasing length.
template <class R>
std::map<std::uint64_t, TensorVector<R>> orbit_table(TensorKey k, int n, const Scalars<R>& S) {
  auto perms = all_permutations(n);
  std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  std::map<std::uint64_t, TensorVector<R>> table;
  for (const auto& w : perms) {
    if (w.is_identity()) {
      table[w.pack()] = basis_vector(k, S);
      continue;
    }
    int i = 1;
    while (w.ascends_right(i)) ++i;
    Permutation shorter = w * Permutation::simple(i, n);
    table[w.pack()] = act_G(table.at(shorter.pack()), i, n, S);
  }
  return table;
}

// Nullity of the span of the given basis elements acting on the given inputs.
template <class R>
long kernel_dim_at(const std::vector<BasisKey>& rows, const std::vector<TensorKey>& inputs, int n, const Scalars<R>& S) {
  std::map<std::uint64_t, std::vector<TensorKey>> by_part;  // by A_s
  for (TensorKey k : inputs) by_part[s_partition_code(k, n)].push_back(k);
  std::map<TensorKey, std::map<std::uint64_t, TensorVector<R>>> orbits;
  for (TensorKey k : inputs) orbits.emplace(k, orbit_table(k, n, S));
  using Col = std::pair<TensorKey, TensorKey>;
  RowReducer<R, Col> rr;
  for (const auto& key : rows) {
    std::map<Col, R> row;
    auto it = by_part.find(key.part);
    if (it != by_part.end())
      for (TensorKey v : it->second)
        for (const auto& [out, c] : orbits.at(v).at(key.perm)) row.emplace(Col{v, out}, c);
    rr.insert(row);
  }
  return static_cast<long>(rows.size() - rr.rank());
}

template <class R>
long bruteforce_dim_at(const PartitionType& alpha, int N, const Scalars<R>& S) {
  int n = 0;
  for (int a : alpha) n += a;
  return kernel_dim_at(alpha_basis(alpha), tensor_basis_alpha(alpha, N), n, S);
}

// Rank of the images of the elements as operators on the given inputs.
template <class R>
std::size_t tensor_image_rank(const std::vector<Element<R>>& els, const std::vector<TensorKey>& inputs, const Scalars<R>& S) {
  using Col = std::pair<TensorKey, TensorKey>;
  RowReducer<R, Col> rr;
  if (els.empty()) return 0;
  const int n = els.front().n();
  std::map<TensorKey, std::map<std::uint64_t, TensorVector<R>>> orbits;
  for (TensorKey k : inputs) orbits.emplace(k, orbit_table(k, n, S));
  for (const auto& a : els) {
    std::map<Col, R> row;
    for (const auto& [key, c] : a.terms())
      for (TensorKey v : inputs) {
        if (s_partition_code(v, n) != key.part) continue;
        for (const auto& [out, x] : orbits.at(v).at(key.perm)) {
          auto [it, fresh] = row.try_emplace(Col{v, out}, x * c);
          if (!fresh) {
            it->second += x * c;
            if (is_zero(it->second)) row.erase(it);
          }
        }
      }
    rr.insert(row);
  }
  return rr.rank();
}

template <class R>
bool kills_tensor_space(const Element<R>& a, const PartitionType& alpha, int N, const Scalars<R>& S) {
  for (TensorKey k : tensor_basis_alpha(alpha, N))
    if (!act_element(basis_vector(k, S), a, S).empty()) return false;
  return true;
}

template <class R>
long ideal_closure_dim(const Element<R>& generator, const Scalars<R>& S) {
  const int n = generator.n();
  RowReducer<R, BasisKey> rr;
  std::vector<Element<R>> queue;
  auto push = [&](const Element<R>& x) {
    if (rr.insert(x.terms())) queue.push_back(x);
  };
  push(generator);
  while (!queue.empty()) {
    Element<R> x = std::move(queue.back());
    queue.pop_back();
    for (int j = 1; j < n; ++j) {
      push(right_mul_g(x, j, S));
      push(right_mul_e(x, j));
      push(left_mul_g(j, x, S));
      push(left_mul_e(j, x));
    }
  }
  return static_cast<long>(rr.rank());
}

}  // namespace bt
