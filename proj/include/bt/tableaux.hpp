#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "bt/set_partitions.hpp"
#include "bt/symmetric_group.hpp"

namespace bt {

using Partition = std::vector<int>;
using MultiComposition = std::vector<Composition>;
using MultiPartition = MultiComposition;
using MultiTableau = std::vector<Rows>;  // component -> rows -> entries

int size_of(const Composition& c);
int size_of(const MultiComposition& b);
bool is_partition(const Composition& c);
int columns_of(const Composition& c);  // largest part, 0 when empty

MultiComposition shape_of(const MultiTableau& t);
MultiTableau initial_multitableau(const MultiComposition& b);  // t^blam
MultiTableau column_multitableau(const MultiComposition& b);   // t_blam
Permutation d_of(const MultiTableau& t);
MultiTableau multitableau_of(const Permutation& w, const MultiComposition& b);  // t^blam w
MultiTableau act_entries(const MultiTableau& t, const Permutation& w);          // t w
Rows concatenate(const MultiTableau& t);  // components stacked top to bottom
Composition rows_of(const MultiComposition& b);  // all rows of all components, in order

bool is_row_standard(const MultiTableau& t);
bool is_standard(const MultiTableau& t);
std::vector<MultiTableau> enumerate_rstd(const MultiComposition& b);
std::vector<MultiTableau> enumerate_std(const MultiComposition& b);
long count_std(const MultiComposition& b);  // hook length formula, partitions only

struct Position {
  int p, r, c;  // component, row, column; all 1-based
};
std::vector<Position> positions(const MultiTableau& t);  // index j-1 -> position of j
bool is_initial_kind(const MultiTableau& t);
Composition norm(const MultiComposition& b);      // component sizes
Rows norm(const MultiTableau& t);                 // row readings of the components

// w = w0 d(t) relative to S_blam (rows of all components).
struct MultiDecomposition {
  Permutation w0;
  MultiTableau t;
  Permutation d;
};
MultiDecomposition multicomp_decompose(const Permutation& w, const MultiComposition& b);
// w = w0 d(t) relative to S_{||blam||}; t has row standard norm, s0 is of the initial kind.
struct InitialKindDecomposition {
  Permutation w0;
  MultiTableau s0;  // w0 = d(s0)
  MultiTableau t;
  Permutation d;
};
InitialKindDecomposition initial_kind_decompose(const Permutation& w, const MultiComposition& b);

Permutation w_lambda(const MultiPartition& b);

// Dominance. Compositions are compared by partial sums (padded with zeros).
bool dominates_comp(const Composition& small, const Composition& big);
bool dominance_multicomp(const MultiComposition& a, const MultiComposition& b);
MultiTableau restrict_to(const MultiTableau& t, int m);
bool dominance_multitableau(const MultiTableau& s, const MultiTableau& t);

Partition conjugate(const Partition& p);
MultiPartition conjugate(const MultiPartition& b);
Rows conjugate_rows(const Rows& t);  // single tableau
MultiTableau conjugate(const MultiTableau& t);

// Fixed total order extending dominance: by size, then lexicographically.
bool partition_less(const Partition& a, const Partition& b);
bool is_increasing(const MultiPartition& b);

// ---- Lambda data

struct LambdaPair {
  MultiPartition blam;
  MultiPartition bmu;
  bool operator==(const LambdaPair& o) const { return blam == o.blam && bmu == o.bmu; }
  bool operator<(const LambdaPair& o) const { return std::tie(blam, bmu) < std::tie(o.blam, o.bmu); }
};

struct LambdaTableau {
  MultiTableau t;
  MultiTableau u;
  bool operator==(const LambdaTableau& o) const { return t == o.t && u == o.u; }
  bool operator<(const LambdaTableau& o) const { return std::tie(t, u) < std::tie(o.t, o.u); }
};

// Runs of equal components: (first component index, multiplicity), 0-based.
std::vector<std::pair<int, int>> equal_runs(const MultiPartition& blam);
std::vector<MultiPartition> increasing_multipartitions(const PartitionType& alpha);
std::vector<LambdaPair> enumerate_L(int n, const PartitionType& alpha);
int max_columns(const LambdaPair& lam);
struct ColumnSplit {
  std::vector<LambdaPair> within;  // every component has at most N columns
  std::vector<LambdaPair> beyond;
};
ColumnSplit filter_columns(const std::vector<LambdaPair>& L, int N);

LambdaPair conjugate(const LambdaPair& lam);
LambdaTableau conjugate(const LambdaTableau& t);
LambdaPair shape_of(const LambdaTableau& t);
bool is_increasing_tableau(const MultiTableau& t, const MultiPartition& blam);
std::vector<LambdaTableau> enumerate_rstd_Lambda(const LambdaPair& lam);
std::vector<LambdaTableau> enumerate_std_Lambda(const LambdaPair& lam);
long count_std_Lambda(const LambdaPair& lam);
LambdaTableau top_tableau(const LambdaPair& lam);     // (t^blam | t^bmu)
LambdaTableau bottom_tableau(const LambdaPair& lam);  // (t_blam | t_bmu)

// Block permutation B_w for w in S_r permuting equal components (order preserving on blocks).
Permutation block_permutation(const MultiPartition& blam, const Permutation& w);
Permutation block_transposition(const MultiPartition& blam, int i);  // B_i

// d(u * t) = B_u d(t): reorder the components of t so that it becomes increasing.
// Returns the block permutation u used and the reordered tableau.
std::pair<Permutation, MultiTableau> make_increasing(const MultiTableau& t, const MultiPartition& blam);

// The action of s_i on row standard Lambda-tableaux.
MultiTableau dot_si(const MultiTableau& s, int i);  // s . s_i for RStd(blam)
LambdaTableau tableau_dot_si(const LambdaTableau& es, int i, const LambdaPair& lam);

bool dominance_Lambda_tableau(const LambdaTableau& s, const LambdaTableau& t);
// Strict order on L_n(alpha).
bool Lambda_less(const LambdaPair& a, const LambdaPair& b);

}  // namespace bt
