#pragma once

#include <cstdint>
#include <vector>

#include "bt/symmetric_group.hpp"

namespace bt {

using Block = std::vector<int>;
using PartitionType = std::vector<int>;  // weakly decreasing block sizes

// Set partition of {1..n}. Stored as a restricted growth string: label[k] is the
// index of the block containing k+1, blocks numbered by their minima.
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition singletons(int n);
  static SetPartition one_block(int n);
  static SetPartition from_blocks(const std::vector<Block>& blocks);
  static SetPartition from_labels(const std::vector<int>& labels);  // any labelling, canonicalised

  int size() const { return static_cast<int>(label_.size()); }
  int num_blocks() const { return nblocks_; }
  std::vector<Block> blocks() const;
  bool same_block(int a, int b) const { return label_[a - 1] == label_[b - 1]; }
  int block_of(int a) const { return label_[a - 1]; }
  const std::vector<int>& labels() const { return label_; }

  // A <= B in the coarsening order: every block of B is a union of blocks of A.
  bool finer_or_equal(const SetPartition& b) const;

  bool operator==(const SetPartition& o) const { return label_ == o.label_; }
  bool operator!=(const SetPartition& o) const { return label_ != o.label_; }
  bool operator<(const SetPartition& o) const { return label_ < o.label_; }

  std::uint64_t pack() const;  // n <= 16
  static SetPartition unpack(std::uint64_t code, int n);

 private:
  std::vector<int> label_;
  int nblocks_ = 0;
};

SetPartition join(const SetPartition& a, const SetPartition& b);
// A w : every block mapped elementwise by w.
SetPartition act(const SetPartition& a, const Permutation& w);
PartitionType type_of(const SetPartition& a);

std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<SetPartition> enumerate_of_type(const PartitionType& alpha);
std::vector<SetPartition> coarsenings(const SetPartition& a);

// Moebius function of the interval [a, b]; throws when a is not finer than b.
long moebius(const SetPartition& a, const SetPartition& b);

// Consecutive intervals of the given sizes, zero sizes skipped.
SetPartition partition_from_sizes(const std::vector<int>& sizes);
// Fibres of a sequence with entries in {1..r}.
SetPartition partition_from_seq(const std::vector<int>& s);

// The pair partition {i, i+1} plus singletons.
SetPartition pair_partition(int i, int n);

// Integer partitions of n in decreasing lexicographic order.
std::vector<PartitionType> integer_partitions(int n);

long bell_number(int n);

}  // namespace bt
