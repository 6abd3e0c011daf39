#include "bt/set_partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bt {

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition p;
  std::map<int, int> relabel;
  p.label_.reserve(labels.size());
  for (int x : labels) {
    auto [it, fresh] = relabel.try_emplace(x, static_cast<int>(relabel.size()));
    p.label_.push_back(it->second);
  }
  p.nblocks_ = static_cast<int>(relabel.size());
  return p;
}

SetPartition SetPartition::singletons(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return from_labels(l);
}

SetPartition SetPartition::one_block(int n) { return from_labels(std::vector<int>(n, 0)); }

SetPartition SetPartition::from_blocks(const std::vector<Block>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  std::vector<int> l(n, -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw std::invalid_argument("empty block");
    for (int x : blocks[j]) {
      if (x < 1 || x > n || l[x - 1] != -1) throw std::invalid_argument("blocks do not partition {1..n}");
      l[x - 1] = static_cast<int>(j);
    }
  }
  return from_labels(l);
}

std::vector<Block> SetPartition::blocks() const {
  std::vector<Block> out(nblocks_);
  for (std::size_t k = 0; k < label_.size(); ++k) out[label_[k]].push_back(static_cast<int>(k) + 1);
  return out;
}

bool SetPartition::finer_or_equal(const SetPartition& b) const {
  if (size() != b.size()) throw std::invalid_argument("set partition size mismatch");
  // every block of *this must sit inside one block of b
  std::vector<int> image(nblocks_, -1);
  for (std::size_t k = 0; k < label_.size(); ++k) {
    int& im = image[label_[k]];
    if (im == -1) im = b.label_[k];
    else if (im != b.label_[k]) return false;
  }
  return true;
}

std::uint64_t SetPartition::pack() const {
  if (label_.size() > 16) throw std::length_error("pack needs n <= 16");
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < label_.size(); ++k) c |= static_cast<std::uint64_t>(label_[k]) << (4 * k);
  return c;
}

SetPartition SetPartition::unpack(std::uint64_t code, int n) {
  std::vector<int> l(n);
  for (int k = 0; k < n; ++k) l[k] = static_cast<int>((code >> (4 * k)) & 0xF);
  return from_labels(l);
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("set partition size mismatch");
  const int n = a.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> firstA(a.num_blocks(), -1), firstB(b.num_blocks(), -1);
  for (int k = 0; k < n; ++k) {
    for (auto [lab, first] : {std::pair{a.labels()[k], &firstA}, std::pair{b.labels()[k], &firstB}}) {
      int& f = (*first)[lab];
      if (f == -1) f = k;
      else parent[find(k)] = find(f);
    }
  }
  std::vector<int> l(n);
  for (int k = 0; k < n; ++k) l[k] = find(k);
  return SetPartition::from_labels(l);
}

SetPartition act(const SetPartition& a, const Permutation& w) {
  if (a.size() != w.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> l(a.size());
  for (int k = 1; k <= a.size(); ++k) l[w(k) - 1] = a.block_of(k);
  return SetPartition::from_labels(l);
}

PartitionType type_of(const SetPartition& a) {
  PartitionType t(a.num_blocks(), 0);
  for (int lab : a.labels()) ++t[lab];
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int k, int mx) {
    if (k == n) {
      out.push_back(SetPartition::from_labels(rgs));
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[k] = v;
      rec(k + 1, std::max(mx, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

std::vector<SetPartition> enumerate_of_type(const PartitionType& alpha) {
  int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  PartitionType sorted = alpha;
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<SetPartition> out;
  for (auto& a : enumerate_set_partitions(n))
    if (type_of(a) == sorted) out.push_back(a);
  return out;
}

std::vector<SetPartition> coarsenings(const SetPartition& a) {
  // set partitions of the blocks of a, pulled back to {1..n}
  std::vector<SetPartition> out;
  for (auto& p : enumerate_set_partitions(a.num_blocks())) {
    std::vector<int> l(a.size());
    for (int k = 0; k < a.size(); ++k) l[k] = p.labels()[a.labels()[k]];
    out.push_back(SetPartition::from_labels(l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long moebius(const SetPartition& a, const SetPartition& b) {
  if (!a.finer_or_equal(b)) throw std::domain_error("moebius needs a finer than b");
  // each block of b containing k blocks of a contributes (-1)^(k-1) (k-1)!
  std::vector<std::vector<int>> inside(b.num_blocks());
  for (int k = 0; k < a.size(); ++k) {
    auto& v = inside[b.labels()[k]];
    if (std::find(v.begin(), v.end(), a.labels()[k]) == v.end()) v.push_back(a.labels()[k]);
  }
  long mu = 1;
  for (const auto& v : inside) {
    long k = static_cast<long>(v.size());
    long f = 1;
    for (long j = 2; j < k; ++j) f *= j;
    mu *= ((k - 1) % 2 == 0 ? 1 : -1) * f;
  }
  return mu;
}

SetPartition partition_from_sizes(const std::vector<int>& sizes) {
  std::vector<int> l;
  int lab = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("negative size");
    if (s == 0) continue;
    l.insert(l.end(), s, lab++);
  }
  return SetPartition::from_labels(l);
}

SetPartition partition_from_seq(const std::vector<int>& s) { return SetPartition::from_labels(s); }

SetPartition pair_partition(int i, int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  l[i] = l[i - 1];
  return SetPartition::from_labels(l);
}

std::vector<PartitionType> integer_partitions(int n) {
  std::vector<PartitionType> out;
  PartitionType cur;
  std::function<void(int, int)> rec = [&](int rest, int mx) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long bell_number(int n) {
  // Bell triangle
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next{row.back()};
    for (long x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

}  // namespace bt
