#include "bt/cellular_bases.hpp"

#include <algorithm>

namespace bt {

SetPartition A_lambda(const MultiComposition& blam) { return partition_from_sizes(norm(blam)); }

PartitionType type_of(const MultiComposition& blam) {
  PartitionType t;
  for (int s : norm(blam))
    if (s > 0) t.push_back(s);
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<CellIndex> cell_indices(const std::vector<LambdaPair>& lams) {
  std::vector<CellIndex> out;
  for (const auto& lam : lams) {
    auto st = enumerate_std_Lambda(lam);
    for (const auto& s : st)
      for (const auto& t : st) out.push_back({lam, s, t});
  }
  return out;
}

std::vector<CellIndex> cell_indices(int n, const PartitionType& alpha) { return cell_indices(enumerate_L(n, alpha)); }

}  // namespace bt
