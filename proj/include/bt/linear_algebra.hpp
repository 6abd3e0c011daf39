#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>

#include "bt/coefficients.hpp"

namespace bt {

inline ModP field_inverse(const ModP& x) { return x.inverse(); }
inline FieldScalar field_inverse(const FieldScalar& x) { return x.inverse(); }
inline Rational field_inverse(const Rational& x) {
  Rational r = 1 / x;
  r.canonicalize();
  return r;
}

// Incremental sparse echelon form over a field. Rows are maps column -> value;
// every stored row is monic at its leading column, and leading columns are distinct.
template <class R, class Col = std::size_t>
class RowReducer {
 public:
  using Row = std::map<Col, R>;

  // Reduce a row against the stored pivots; the residual has no pivot columns.
  Row reduce(Row row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Col c = it->first;
      const R f = it->second;
      for (const auto& [col, v] : p->second) {
        auto [jt, fresh] = row.try_emplace(col, -(v * f));
        if (!fresh) {
          jt->second -= v * f;
          if (is_zero(jt->second)) row.erase(jt);
        }
      }
      it = row.upper_bound(c);
    }
    return row;
  }

  bool in_span(const Row& row) const { return reduce(row).empty(); }

  // Returns true when the row was independent of the stored ones.
  bool insert(const Row& row) {
    Row r = reduce(row);
    if (r.empty()) return false;
    const R inv = field_inverse(r.begin()->second);
    for (auto& [col, v] : r) v = v * inv;
    Col lead = r.begin()->first;
    pivots_.emplace(lead, std::move(r));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::map<Col, Row>& pivots() const { return pivots_; }

 private:
  std::map<Col, Row> pivots_;
};

}  // namespace bt
