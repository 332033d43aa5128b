#include "binext/poly/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace binext::poly {

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Elimination: return "elimination";
  }
  return "unknown";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "deglex") return OrderKind::DegLex;
  if (name == "degrevlex") return OrderKind::DegRevLex;
  return std::nullopt;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t num_variables)
    : kind_(kind), ranking_(num_variables) {
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking,
                             std::size_t block_size)
    : kind_(kind), ranking_(std::move(ranking)), block_(block_size) {
  std::vector<std::size_t> sorted = ranking_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("monomial order ranking is not a permutation");
  }
  if (block_ > ranking_.size()) throw std::invalid_argument("elimination block too large");
}

MonomialOrder MonomialOrder::elimination(std::size_t num_variables,
                                         std::vector<std::size_t> eliminated) {
  std::vector<std::size_t> ranking = eliminated;
  for (std::size_t v = 0; v < num_variables; ++v) {
    if (std::find(eliminated.begin(), eliminated.end(), v) == eliminated.end()) {
      ranking.push_back(v);
    }
  }
  return MonomialOrder(OrderKind::Elimination, std::move(ranking), eliminated.size());
}

int MonomialOrder::compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin,
                                     std::size_t end) const {
  std::uint32_t da = 0;
  std::uint32_t db = 0;
  for (std::size_t k = begin; k < end; ++k) {
    da += a[ranking_[k]];
    db += b[ranking_[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = end; k-- > begin;) {
    auto ea = a[ranking_[k]];
    auto eb = b[ranking_[k]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = ranking_.size();
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t k = 0; k < n; ++k) {
        auto ea = a[ranking_[k]];
        auto eb = b[ranking_[k]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t k = 0; k < n; ++k) {
        auto ea = a[ranking_[k]];
        auto eb = b[ranking_[k]];
        if (ea != eb) return ea < eb ? -1 : 1;
      }
      return 0;
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return compare_degrevlex(a, b, 0, n);
    case OrderKind::Elimination:
      if (int c = compare_degrevlex(a, b, 0, block_); c != 0) return c;
      return compare_degrevlex(a, b, block_, n);
  }
  return 0;
}

}  // namespace binext::poly
