#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "binext/poly/groebner.hpp"
#include "binext/poly/monomial.hpp"

namespace binext::poly {

/// Hilbert data of K[x_1..x_n]/I read from the monomial ideal of leading terms.
///
/// The Hilbert series is numerator(t) / (1 - t)^n. After cancelling all
/// factors (1 - t) it becomes reduced_numerator(t) / (1 - t)^dimension and
/// degree = reduced_numerator(1). For the zero ring (I = (1)) dimension is -1,
/// codimension n + 1 and degree 0.
struct HilbertData {
  int dimension = 0;
  int codimension = 0;
  std::int64_t degree = 0;
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> reduced_numerator;
};

/// Hilbert series numerator of K[x]/(gens) over (1 - t)^n, by pivot recursion
/// on the most frequent variable among the minimal generators.
std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens,
                                            std::size_t num_variables);

HilbertData hilbert_data(const std::vector<Monomial>& leading_monomials, std::size_t num_variables);

/// Largest set of variables S such that no generator is supported inside S.
int krull_dimension_lt(const std::vector<Monomial>& leading_monomials, std::size_t num_variables);

/// Value of the Hilbert function of K[x]/(gens) in the given degree.
std::int64_t hilbert_function(const std::vector<Monomial>& gens, std::size_t num_variables,
                              unsigned degree);

template <class Field>
HilbertData hilbert_data(const GroebnerBasis<Field>& gb, std::size_t num_variables) {
  return hilbert_data(gb.leading_monomials(), num_variables);
}

template <class Field>
int krull_dimension_lt(const GroebnerBasis<Field>& gb, std::size_t num_variables) {
  return krull_dimension_lt(gb.leading_monomials(), num_variables);
}

}  // namespace binext::poly
