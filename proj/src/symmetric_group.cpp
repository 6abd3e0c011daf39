#include "bt/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bt {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  Permutation w;
  w.img_.resize(one_based.size());
  std::vector<bool> seen(one_based.size(), false);
  for (std::size_t k = 0; k < one_based.size(); ++k) {
    int x = one_based[k] - 1;
    if (x < 0 || x >= static_cast<int>(one_based.size()) || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = true;
    w.img_[k] = x;
  }
  return w;
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index");
  Permutation w(n);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

Permutation Permutation::from_word(const ReducedWord& word, int n) {
  Permutation w(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("word letter out of range");
    // w s_i : swap the values i and i+1
    for (int& x : w.img_) {
      if (x == i - 1) x = i;
      else if (x == i) x = i - 1;
    }
  }
  return w;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> r(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) r[k] = img_[k] + 1;
  return r;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) r.img_[k] = v.img_[img_[k]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t k = 0; k < img_.size(); ++k) r.img_[img_[k]] = static_cast<int>(k);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k)) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < img_.size(); ++a)
    for (std::size_t b = a + 1; b < img_.size(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

bool Permutation::ascends_right(int i) const {
  // w s_i swaps the values i, i+1; length grows iff value i comes first.
  for (int x : img_) {
    if (x == i - 1) return true;
    if (x == i) return false;
  }
  return false;
}

ReducedWord Permutation::reduced_word() const {
  // Strip right descents: w = (w s_i) s_i whenever l(w s_i) < l(w).
  ReducedWord rev;
  Permutation w = *this;
  const int n = size();
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n; ++i) {
      if (!w.ascends_right(i)) {
        w = w * simple(i, n);
        rev.push_back(i);
        found = true;
        break;
      }
    }
  }
  return ReducedWord(rev.rbegin(), rev.rend());
}

std::uint64_t Permutation::pack() const {
  if (img_.size() > 16) throw std::length_error("pack needs n <= 16");
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < img_.size(); ++k) c |= static_cast<std::uint64_t>(img_[k]) << (4 * k);
  return c;
}

Permutation Permutation::unpack(std::uint64_t code, int n) {
  Permutation w;
  w.img_.resize(n);
  for (int k = 0; k < n; ++k) w.img_[k] = static_cast<int>((code >> (4 * k)) & 0xF);
  return w;
}

Permutation compose(const Permutation& u, const Permutation& v) { return u * v; }
int length(const Permutation& w) { return w.length(); }
ReducedWord reduced_word(const Permutation& w) { return w.reduced_word(); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_one_line(a));
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

std::vector<Permutation> young_subgroup(const Composition& lam) {
  int n = std::accumulate(lam.begin(), lam.end(), 0);
  std::vector<Permutation> out{Permutation(n)};
  int start = 0;
  for (int part : lam) {
    std::vector<int> block(part);
    std::iota(block.begin(), block.end(), start + 1);
    std::vector<Permutation> next;
    std::vector<int> img = block;
    do {
      std::vector<int> line(n);
      std::iota(line.begin(), line.end(), 1);
      for (int k = 0; k < part; ++k) line[start + k] = img[k];
      Permutation f = Permutation::from_one_line(line);
      for (const auto& w : out) next.push_back(w * f);
    } while (std::next_permutation(img.begin(), img.end()));
    out = std::move(next);
    start += part;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_young_subgroup(const Permutation& w, const Composition& lam) {
  int start = 0;
  for (int part : lam) {
    for (int k = start + 1; k <= start + part; ++k)
      if (w(k) <= start || w(k) > start + part) return false;
    start += part;
  }
  return true;
}

Rows tableau_of(const Permutation& w, const Composition& lam) {
  Rows t;
  int k = 1;
  for (int part : lam) {
    std::vector<int> row;
    for (int c = 0; c < part; ++c) row.push_back(w(k++));
    t.push_back(row);
  }
  if (k - 1 != w.size()) throw std::invalid_argument("composition does not match n");
  return t;
}

Permutation d_of(const Rows& t) {
  std::vector<int> line;
  for (const auto& row : t) line.insert(line.end(), row.begin(), row.end());
  return Permutation::from_one_line(line);
}

Rows initial_tableau(const Composition& lam) {
  int n = std::accumulate(lam.begin(), lam.end(), 0);
  return tableau_of(Permutation(n), lam);
}

bool is_row_standard(const Rows& t) {
  for (const auto& row : t)
    if (!std::is_sorted(row.begin(), row.end())) return false;
  return true;
}

ParabolicDecomposition parabolic_decompose(const Permutation& w, const Composition& lam) {
  Rows t = tableau_of(w, lam);
  for (auto& row : t) std::sort(row.begin(), row.end());
  Permutation d = d_of(t);
  return {w * d.inverse(), t, d};
}

std::vector<int> descent_sequence(const Rows& s) {
  // row index of each entry
  int n = 0;
  for (const auto& row : s) n += static_cast<int>(row.size());
  Rows cur = s;
  auto row_of = [&](int x) {
    for (std::size_t r = 0; r < cur.size(); ++r)
      if (std::find(cur[r].begin(), cur[r].end(), x) != cur[r].end()) return static_cast<int>(r);
    return -1;
  };
  std::vector<int> seq;
  bool found = true;
  while (found) {
    found = false;
    for (int j = 1; j < n; ++j) {
      if (row_of(j) > row_of(j + 1)) {
        for (auto& row : cur)
          for (int& x : row) {
            if (x == j) x = j + 1;
            else if (x == j + 1) x = j;
          }
        seq.push_back(j);
        found = true;
        break;
      }
    }
  }
  return seq;
}

}  // namespace bt
