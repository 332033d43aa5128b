#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace binext::poly {

/// Incremental row echelon form over a field for sparse rows. Each stored
/// row is normalized so that its pivot (smallest column) has coefficient one.
template <class Field>
class SparseEchelon {
 public:
  using Element = typename Field::Element;
  using Row = std::vector<std::pair<std::size_t, Element>>;  // sorted by column

  explicit SparseEchelon(Field field) : field_(std::move(field)) {}

  /// Reduces `row` against the stored pivots; returns the remainder.
  Row reduce(Row row) const {
    normalize(row);
    Row out;
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) return row;
      row = axpy(row, field_.neg(row.front().second), rows_[it->second]);
    }
    return out;
  }

  /// Adds a row; returns true if it increased the rank.
  bool insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Element inv = field_.inv(row.front().second);
    for (auto& [col, val] : row) val = field_.mul(val, inv);
    pivots_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(Row row) const { return reduce(std::move(row)).empty(); }
  bool contains_unit(std::size_t column) const { return contains(Row{{column, field_.one()}}); }
  bool has_pivot(std::size_t column) const { return pivots_.count(column) != 0; }
  std::size_t rank() const { return rows_.size(); }

 private:
  void normalize(Row& row) const {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second = field_.add(merged.back().second, e.second);
      } else {
        merged.push_back(std::move(e));
      }
    }
    std::erase_if(merged, [&](const auto& e) { return field_.is_zero(e.second); });
    row = std::move(merged);
  }

  // a + c * b
  Row axpy(const Row& a, const Element& c, const Row& b) const {
    Row r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.emplace_back(b[j].first, field_.mul(c, b[j].second));
        ++j;
      } else {
        Element s = field_.add(a[i].second, field_.mul(c, b[j].second));
        if (!field_.is_zero(s)) r.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  Field field_;
  std::vector<Row> rows_;
  std::unordered_map<std::size_t, std::size_t> pivots_;
};

}  // namespace binext::poly
