#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bt {

using Composition = std::vector<int>;
// A tableau of composition shape, stored row by row.
using Rows = std::vector<std::vector<int>>;
using ReducedWord = std::vector<int>;

// Permutation of {1..n} acting on the right: k.w = w(k), and u*v applies u first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  static Permutation from_one_line(const std::vector<int>& one_based);
  static Permutation simple(int i, int n);  // s_i = (i, i+1)
  static Permutation from_word(const ReducedWord& word, int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int k) const { return img_[k - 1] + 1; }  // 1-based image
  std::vector<int> one_line() const;

  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;
  bool is_identity() const;
  int length() const;
  ReducedWord reduced_word() const;
  // true when l(w s_i) > l(w)
  bool ascends_right(int i) const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Four bits per point; requires n <= 16.
  std::uint64_t pack() const;
  static Permutation unpack(std::uint64_t code, int n);

  const std::vector<int>& zero_based() const { return img_; }

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& u, const Permutation& v);
int length(const Permutation& w);
ReducedWord reduced_word(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// Elements of the row stabiliser of t^lam, i.e. the Young subgroup S_lam.
std::vector<Permutation> young_subgroup(const Composition& lam);
bool in_young_subgroup(const Permutation& w, const Composition& lam);

// t^lam w : the tableau whose row reading is the one-line notation of w.
Rows tableau_of(const Permutation& w, const Composition& lam);
// d(t) with t = t^lam d(t).
Permutation d_of(const Rows& t);
Rows initial_tableau(const Composition& lam);
bool is_row_standard(const Rows& t);

struct ParabolicDecomposition {
  Permutation w0;  // in S_lam
  Rows t;          // row standard
  Permutation d;   // d(t)
};

// w = w0 d(t) with lengths adding.
ParabolicDecomposition parabolic_decompose(const Permutation& w, const Composition& lam);

// The step-by-step variant: repeatedly swap j and j+1 when j sits strictly below j+1,
// until reaching t^lam up to row order. Returns the sequence of j's used.
std::vector<int> descent_sequence(const Rows& s);

}  // namespace bt
