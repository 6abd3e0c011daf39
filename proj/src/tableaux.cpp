#include "bt/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bt {

int size_of(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

int size_of(const MultiComposition& b) {
  int n = 0;
  for (const auto& c : b) n += size_of(c);
  return n;
}

bool is_partition(const Composition& c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] <= 0) return false;
    if (k > 0 && c[k] > c[k - 1]) return false;
  }
  return true;
}

int columns_of(const Composition& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

MultiComposition shape_of(const MultiTableau& t) {
  MultiComposition b;
  for (const auto& comp : t) {
    Composition c;
    for (const auto& row : comp) c.push_back(static_cast<int>(row.size()));
    b.push_back(c);
  }
  return b;
}

MultiTableau initial_multitableau(const MultiComposition& b) {
  MultiTableau t;
  int k = 1;
  for (const auto& c : b) {
    Rows comp;
    for (int part : c) {
      std::vector<int> row(part);
      std::iota(row.begin(), row.end(), k);
      k += part;
      comp.push_back(row);
    }
    t.push_back(comp);
  }
  return t;
}

MultiTableau column_multitableau(const MultiComposition& b) {
  MultiTableau t;
  int k = 1;
  for (const auto& c : b) {
    Rows comp;
    for (int part : c) comp.emplace_back(part, 0);
    for (int col = 0; col < columns_of(c); ++col)
      for (auto& row : comp)
        if (col < static_cast<int>(row.size())) row[col] = k++;
    t.push_back(comp);
  }
  return t;
}

Rows concatenate(const MultiTableau& t) {
  Rows all;
  for (const auto& comp : t) all.insert(all.end(), comp.begin(), comp.end());
  return all;
}

Composition rows_of(const MultiComposition& b) {
  Composition all;
  for (const auto& c : b) all.insert(all.end(), c.begin(), c.end());
  return all;
}

Permutation d_of(const MultiTableau& t) { return d_of(concatenate(t)); }

MultiTableau multitableau_of(const Permutation& w, const MultiComposition& b) {
  return act_entries(initial_multitableau(b), w);
}

MultiTableau act_entries(const MultiTableau& t, const Permutation& w) {
  MultiTableau r = t;
  for (auto& comp : r)
    for (auto& row : comp)
      for (int& x : row) x = w(x);
  return r;
}

bool is_row_standard(const MultiTableau& t) {
  for (const auto& comp : t)
    if (!is_row_standard(comp)) return false;
  return true;
}

bool is_standard(const MultiTableau& t) {
  if (!is_row_standard(t)) return false;
  for (const auto& comp : t)
    for (std::size_t r = 1; r < comp.size(); ++r)
      for (std::size_t c = 0; c < comp[r].size() && c < comp[r - 1].size(); ++c)
        if (comp[r][c] < comp[r - 1][c]) return false;
  return true;
}

namespace {

// Place 1..n one at a time; `allowed` decides whether j may go at the end of row (p, r).
std::vector<MultiTableau> fill(const MultiComposition& b, bool standard) {
  const int n = size_of(b);
  MultiTableau cur;
  for (const auto& c : b) cur.push_back(Rows(c.size()));
  std::vector<MultiTableau> out;
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = 0; p < b.size(); ++p)
      for (std::size_t r = 0; r < b[p].size(); ++r) {
        auto& row = cur[p][r];
        int c = static_cast<int>(row.size());
        if (c >= b[p][r]) continue;
        if (standard && r > 0 && c < b[p][r - 1] && static_cast<int>(cur[p][r - 1].size()) <= c) continue;
        row.push_back(j);
        rec(j + 1);
        row.pop_back();
      }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::vector<MultiTableau> enumerate_rstd(const MultiComposition& b) { return fill(b, false); }
std::vector<MultiTableau> enumerate_std(const MultiComposition& b) { return fill(b, true); }

long count_std(const MultiComposition& b) {
  long total = factorial(size_of(b));
  for (const auto& c : b) {
    if (!c.empty() && !is_partition(c)) throw std::invalid_argument("hook formula needs partitions");
    Partition conj = conjugate(c);
    long hooks = 1;
    for (std::size_t r = 0; r < c.size(); ++r)
      for (int col = 0; col < c[r]; ++col) hooks *= (c[r] - col - 1) + (conj[col] - static_cast<int>(r) - 1) + 1;
    total /= hooks;
  }
  return total;
}

std::vector<Position> positions(const MultiTableau& t) {
  int n = 0;
  for (const auto& comp : t)
    for (const auto& row : comp) n += static_cast<int>(row.size());
  std::vector<Position> pos(n);
  for (std::size_t p = 0; p < t.size(); ++p)
    for (std::size_t r = 0; r < t[p].size(); ++r)
      for (std::size_t c = 0; c < t[p][r].size(); ++c)
        pos[t[p][r][c] - 1] = {static_cast<int>(p) + 1, static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  return pos;
}

bool is_initial_kind(const MultiTableau& t) {
  auto a = positions(t);
  auto b = positions(initial_multitableau(shape_of(t)));
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j].p != b[j].p) return false;
  return true;
}

Composition norm(const MultiComposition& b) {
  Composition c;
  for (const auto& comp : b) c.push_back(size_of(comp));
  return c;
}

Rows norm(const MultiTableau& t) {
  Rows out;
  for (const auto& comp : t) {
    std::vector<int> reading;
    for (const auto& row : comp) reading.insert(reading.end(), row.begin(), row.end());
    out.push_back(reading);
  }
  return out;
}

namespace {

MultiTableau split_like(const Rows& flat, const MultiComposition& b) {
  // inverse of concatenate for the given shape
  MultiTableau t;
  std::size_t k = 0;
  for (const auto& c : b) {
    Rows comp;
    for (std::size_t r = 0; r < c.size(); ++r) comp.push_back(flat[k++]);
    t.push_back(comp);
  }
  return t;
}

MultiTableau refill(const Rows& readings, const MultiComposition& b) {
  // component readings poured back into the rows of b
  MultiTableau t;
  for (std::size_t p = 0; p < b.size(); ++p) {
    Rows comp;
    std::size_t k = 0;
    for (int part : b[p]) {
      comp.emplace_back(readings[p].begin() + k, readings[p].begin() + k + part);
      k += part;
    }
    t.push_back(comp);
  }
  return t;
}

}  // namespace

MultiDecomposition multicomp_decompose(const Permutation& w, const MultiComposition& b) {
  auto dec = parabolic_decompose(w, rows_of(b));
  return {dec.w0, split_like(dec.t, b), dec.d};
}

InitialKindDecomposition initial_kind_decompose(const Permutation& w, const MultiComposition& b) {
  auto dec = parabolic_decompose(w, norm(b));
  MultiTableau t = refill(dec.t, b);
  MultiTableau s0 = multitableau_of(dec.w0, b);
  return {dec.w0, s0, t, dec.d};
}

Permutation w_lambda(const MultiPartition& b) { return d_of(column_multitableau(b)); }

bool dominates_comp(const Composition& small, const Composition& big) {
  std::size_t len = std::max(small.size(), big.size());
  int a = 0, c = 0;
  for (std::size_t k = 0; k < len; ++k) {
    a += k < small.size() ? small[k] : 0;
    c += k < big.size() ? big[k] : 0;
    if (a > c) return false;
  }
  return true;
}

bool dominance_multicomp(const MultiComposition& a, const MultiComposition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multicompositions of different length");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!dominates_comp(a[k], b[k])) return false;
  return true;
}

MultiTableau restrict_to(const MultiTableau& t, int m) {
  MultiTableau r;
  for (const auto& comp : t) {
    Rows c;
    for (const auto& row : comp) {
      std::vector<int> kept;
      for (int x : row)
        if (x <= m) kept.push_back(x);
      c.push_back(kept);
    }
    r.push_back(c);
  }
  return r;
}

bool dominance_multitableau(const MultiTableau& s, const MultiTableau& t) {
  int n = 0;
  for (const auto& comp : s)
    for (const auto& row : comp) n += static_cast<int>(row.size());
  for (int m = 1; m <= n; ++m)
    if (!dominance_multicomp(shape_of(restrict_to(s, m)), shape_of(restrict_to(t, m)))) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  if (!p.empty() && !is_partition(p)) throw std::invalid_argument("conjugate needs a partition");
  Partition c(columns_of(p), 0);
  for (int part : p)
    for (int k = 0; k < part; ++k) ++c[k];
  return c;
}

MultiPartition conjugate(const MultiPartition& b) {
  MultiPartition r;
  for (const auto& c : b) r.push_back(conjugate(c));
  return r;
}

Rows conjugate_rows(const Rows& t) {
  Composition shape;
  for (const auto& row : t) shape.push_back(static_cast<int>(row.size()));
  Partition cs = conjugate(shape);
  Rows r;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    std::vector<int> row;
    for (int k = 0; k < cs[c]; ++k) row.push_back(t[k][c]);
    r.push_back(row);
  }
  return r;
}

MultiTableau conjugate(const MultiTableau& t) {
  MultiTableau r;
  for (const auto& comp : t) r.push_back(conjugate_rows(comp));
  return r;
}

bool partition_less(const Partition& a, const Partition& b) {
  int sa = size_of(a), sb = size_of(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

bool is_increasing(const MultiPartition& b) {
  for (std::size_t k = 1; k < b.size(); ++k)
    if (partition_less(b[k], b[k - 1])) return false;
  return true;
}

std::vector<std::pair<int, int>> equal_runs(const MultiPartition& blam) {
  std::vector<std::pair<int, int>> runs;
  for (std::size_t k = 0; k < blam.size(); ++k) {
    if (k > 0 && blam[k] == blam[k - 1]) ++runs.back().second;
    else runs.push_back({static_cast<int>(k), 1});
  }
  return runs;
}

std::vector<MultiPartition> increasing_multipartitions(const PartitionType& alpha) {
  // multisets of partitions whose sizes form alpha, listed in increasing order
  std::vector<Partition> pool;
  std::vector<int> sizes = alpha;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int s : sizes)
    for (auto& p : integer_partitions(s)) pool.push_back(p);
  std::sort(pool.begin(), pool.end(), partition_less);
  std::vector<int> need = alpha;
  std::sort(need.begin(), need.end());
  std::vector<MultiPartition> out;
  MultiPartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == alpha.size()) {
      std::vector<int> got;
      for (const auto& p : cur) got.push_back(size_of(p));
      std::sort(got.begin(), got.end());
      if (got == need) out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      rec(k);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<LambdaPair> enumerate_L(int n, const PartitionType& alpha) {
  if (size_of(alpha) != n) throw std::invalid_argument("alpha is not a partition of n");
  std::vector<LambdaPair> out;
  for (auto& blam : increasing_multipartitions(alpha)) {
    auto runs = equal_runs(blam);
    std::vector<MultiPartition> mus{{}};
    for (auto [start, m] : runs) {
      std::vector<MultiPartition> next;
      for (const auto& partial : mus)
        for (auto& p : integer_partitions(m)) {
          auto e = partial;
          e.push_back(p);
          next.push_back(e);
        }
      mus = std::move(next);
    }
    for (auto& bmu : mus) out.push_back({blam, bmu});
  }
  return out;
}

int max_columns(const LambdaPair& lam) {
  int c = 0;
  for (const auto& comp : lam.blam) c = std::max(c, columns_of(comp));
  return c;
}

ColumnSplit filter_columns(const std::vector<LambdaPair>& L, int N) {
  ColumnSplit s;
  for (const auto& lam : L) (max_columns(lam) <= N ? s.within : s.beyond).push_back(lam);
  return s;
}

LambdaPair conjugate(const LambdaPair& lam) { return {conjugate(lam.blam), conjugate(lam.bmu)}; }

LambdaTableau conjugate(const LambdaTableau& t) { return {conjugate(t.t), conjugate(t.u)}; }

LambdaPair shape_of(const LambdaTableau& t) { return {shape_of(t.t), shape_of(t.u)}; }

namespace {

int min_entry(const Rows& comp) {
  int m = 1 << 30;
  for (const auto& row : comp)
    for (int x : row) m = std::min(m, x);
  return m;
}

}  // namespace

bool is_increasing_tableau(const MultiTableau& t, const MultiPartition& blam) {
  for (auto [start, m] : equal_runs(blam))
    for (int k = start + 1; k < start + m; ++k)
      if (min_entry(t[k - 1]) > min_entry(t[k])) return false;
  return true;
}

namespace {

std::vector<LambdaTableau> lambda_tableaux(const LambdaPair& lam, bool standard) {
  std::vector<LambdaTableau> out;
  auto ts = standard ? enumerate_std(lam.blam) : enumerate_rstd(lam.blam);
  auto us = standard ? enumerate_std(lam.bmu) : enumerate_rstd(lam.bmu);
  std::vector<MultiTableau> initial;
  for (auto& u : us)
    if (is_initial_kind(u)) initial.push_back(u);
  for (auto& t : ts) {
    if (!is_increasing_tableau(t, lam.blam)) continue;
    for (auto& u : initial) out.push_back({t, u});
  }
  return out;
}

}  // namespace

std::vector<LambdaTableau> enumerate_rstd_Lambda(const LambdaPair& lam) { return lambda_tableaux(lam, false); }
std::vector<LambdaTableau> enumerate_std_Lambda(const LambdaPair& lam) { return lambda_tableaux(lam, true); }

long count_std_Lambda(const LambdaPair& lam) {
  // increasing standard tableaux: divide by the orderings of equal components
  long t = count_std(lam.blam);
  for (auto [start, m] : equal_runs(lam.blam)) t /= factorial(m);
  long u = 1;
  for (const auto& mu : lam.bmu) u *= count_std(MultiComposition{mu});
  return t * u;
}

LambdaTableau top_tableau(const LambdaPair& lam) {
  return {initial_multitableau(lam.blam), initial_multitableau(lam.bmu)};
}

LambdaTableau bottom_tableau(const LambdaPair& lam) {
  return {column_multitableau(lam.blam), column_multitableau(lam.bmu)};
}

Permutation block_permutation(const MultiPartition& blam, const Permutation& w) {
  const int r = static_cast<int>(blam.size());
  if (w.size() != r) throw std::invalid_argument("block permutation: wrong rank");
  std::vector<int> start(r + 1, 0);
  for (int k = 0; k < r; ++k) start[k + 1] = start[k] + size_of(blam[k]);
  std::vector<int> line(start[r]);
  for (int k = 1; k <= r; ++k) {
    int target = w(k);
    if (blam[k - 1] != blam[target - 1]) throw std::invalid_argument("block permutation mixes unequal components");
    int len = start[k] - start[k - 1];
    for (int o = 0; o < len; ++o) line[start[k - 1] + o] = start[target - 1] + o + 1;
  }
  return Permutation::from_one_line(line);
}

Permutation block_transposition(const MultiPartition& blam, int i) {
  return block_permutation(blam, Permutation::simple(i, static_cast<int>(blam.size())));
}

std::pair<Permutation, MultiTableau> make_increasing(const MultiTableau& t, const MultiPartition& blam) {
  const int r = static_cast<int>(blam.size());
  std::vector<int> line(r);
  std::iota(line.begin(), line.end(), 1);
  for (auto [start, m] : equal_runs(blam))
    std::sort(line.begin() + start, line.begin() + start + m,
              [&](int a, int b) { return min_entry(t[a - 1]) < min_entry(t[b - 1]); });
  Permutation u = Permutation::from_one_line(line);
  MultiTableau s(r);
  for (int k = 1; k <= r; ++k) s[k - 1] = t[u(k) - 1];
  return {u, s};
}

MultiTableau dot_si(const MultiTableau& s, int i) {
  auto pos = positions(s);
  const auto& a = pos[i - 1];
  const auto& b = pos[i];
  if (a.p == b.p && a.r == b.r) return s;
  int n = static_cast<int>(pos.size());
  return act_entries(s, Permutation::simple(i, n));
}

namespace {

Rows sort_rows(Rows t) {
  for (auto& row : t) std::sort(row.begin(), row.end());
  return t;
}

}  // namespace

LambdaTableau tableau_dot_si(const LambdaTableau& es, int i, const LambdaPair& lam) {
  auto pos = positions(es.t);
  const int n = static_cast<int>(pos.size());
  const auto& a = pos[i - 1];
  const auto& b = pos[i];
  if (a.p == b.p) return {dot_si(es.t, i), es.u};
  MultiTableau swapped = act_entries(es.t, Permutation::simple(i, n));
  if (lam.blam[a.p - 1] != lam.blam[b.p - 1] || is_increasing_tableau(swapped, lam.blam))
    return {swapped, es.u};
  // exchange the two offending components and record the block transposition in u
  MultiTableau fixed = swapped;
  std::swap(fixed[a.p - 1], fixed[b.p - 1]);
  const int r = static_cast<int>(lam.blam.size());
  std::vector<int> line(r);
  std::iota(line.begin(), line.end(), 1);
  std::swap(line[a.p - 1], line[b.p - 1]);
  MultiTableau u = act_entries(es.u, Permutation::from_one_line(line));
  for (auto& comp : u) comp = sort_rows(comp);
  return {fixed, u};
}

bool dominance_Lambda_tableau(const LambdaTableau& s, const LambdaTableau& t) {
  // u-parts of different lengths belong to incomparable shapes
  if (s.t.size() != t.t.size() || s.u.size() != t.u.size()) return false;
  return dominance_multitableau(s.t, t.t) && dominance_multitableau(s.u, t.u);
}

bool Lambda_less(const LambdaPair& a, const LambdaPair& b) {
  if (a == b) return false;
  if (a.blam == b.blam) return dominance_multicomp(a.bmu, b.bmu);
  std::vector<int> idx(a.blam.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    MultiPartition perm;
    for (int k : idx) perm.push_back(a.blam[k]);
    if (perm != b.blam && dominance_multicomp(perm, b.blam)) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace bt
