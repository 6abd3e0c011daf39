#include "bt/tensor_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace bt {

TensorKey pack_index(const TensorIndex& x) {
  const int n = static_cast<int>(x.i.size());
  if (static_cast<int>(x.s.size()) != n) throw std::invalid_argument("index length mismatch");
  if (n > 8) throw std::length_error("tensor index needs n <= 8");
  TensorKey k = 0;
  for (int j = 0; j < n; ++j) {
    if (x.i[j] < 1 || x.i[j] > 16 || x.s[j] < 1 || x.s[j] > 16) throw std::out_of_range("tensor index entry");
    k |= static_cast<TensorKey>(x.i[j] - 1) << (4 * j);
    k |= static_cast<TensorKey>(x.s[j] - 1) << (4 * (n + j));
  }
  return k;
}

TensorIndex unpack_index(TensorKey k, int n) {
  TensorIndex x;
  for (int j = 0; j < n; ++j) {
    x.i.push_back(detail::tnib(k, j) + 1);
    x.s.push_back(detail::tnib(k, n + j) + 1);
  }
  return x;
}

std::uint64_t s_partition_code(TensorKey k, int n) {
  std::vector<int> l(n);
  for (int j = 0; j < n; ++j) l[j] = detail::tnib(k, n + j);
  return SetPartition::from_labels(l).pack();
}

std::vector<TensorKey> tensor_basis(int n, int N, int r) {
  std::vector<TensorKey> out;
  TensorIndex x{std::vector<int>(n, 1), std::vector<int>(n, 1)};
  // odometer over (i, s)
  while (true) {
    out.push_back(pack_index(x));
    int j = 0;
    for (; j < 2 * n; ++j) {
      int& d = j < n ? x.i[j] : x.s[j - n];
      int top = j < n ? N : r;
      if (d < top) {
        ++d;
        break;
      }
      d = 1;
    }
    if (j == 2 * n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TensorKey> tensor_basis_alpha(const PartitionType& alpha, int N) {
  int n = 0;
  for (int a : alpha) n += a;
  PartitionType sorted = alpha;
  std::sort(sorted.rbegin(), sorted.rend());
  const int r = static_cast<int>(alpha.size());
  std::vector<TensorKey> out;
  for (TensorKey k : tensor_basis(n, N, r))
    if (type_of(SetPartition::unpack(s_partition_code(k, n), n)) == sorted) out.push_back(k);
  return out;
}

TensorIndex v_from_tableau(const MultiTableau& t, int N) {
  auto pos = positions(t);
  TensorIndex x;
  for (const auto& p : pos) {
    if (p.r > N) throw std::out_of_range("tableau has more than N rows");
    x.i.push_back(p.r);
    x.s.push_back(p.p);
  }
  return x;
}

}  // namespace bt
