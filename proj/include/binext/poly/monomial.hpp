#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace binext::poly {

/// Exponent vector over a fixed ambient variable list.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_variables) : exps_(num_variables, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_variables, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  void set(std::size_t i, Exponent e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Indices of variables with a positive exponent.
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Exponent> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All monomials of total degree `degree` in `num_variables` variables, in
/// lexicographically decreasing exponent order.
std::vector<Monomial> monomials_of_degree(std::size_t num_variables, unsigned degree);

/// Removes non-minimal generators (those divisible by another) and duplicates.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace binext::poly
