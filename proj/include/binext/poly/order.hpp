#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binext/poly/monomial.hpp"

namespace binext::poly {

enum class OrderKind { Lex, DegLex, DegRevLex, Elimination };

std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view name);

/// Term order on monomials. `ranking()[0]` is the largest variable.
///
/// `Elimination` is a product order: the first `block_size()` ranked variables
/// are compared by degrevlex first, ties broken by degrevlex on the rest. Any
/// monomial involving the leading block is larger than every monomial free of it.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::size_t num_variables);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking, std::size_t block_size = 0);

  static MonomialOrder elimination(std::size_t num_variables, std::vector<std::size_t> eliminated);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  std::size_t block_size() const { return block_; }
  std::size_t num_variables() const { return ranking_.size(); }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_ && a.block_ == b.block_;
  }

 private:
  int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin,
                        std::size_t end) const;

  OrderKind kind_ = OrderKind::DegRevLex;
  std::vector<std::size_t> ranking_;
  std::size_t block_ = 0;
};

}  // namespace binext::poly
