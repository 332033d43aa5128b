#pragma once

// The worked examples as in-code extension complexes.

#include "binext/extension.hpp"

namespace binext::testing {

/// Facet [a,b,c,d] with origin a and points x, y, z on ab, ac, ad.
inline ExtensionComplex greduit() {
  auto base = validate_complex({{"a", "b", "c", "d"}});
  return build_extension_complex(base, {{0, "a", {{"b", {"x"}}, {"c", {"y"}}, {"d", {"z"}}}}});
}

/// Reconstructed four-facet complex carrying matrices M1..M4.
inline ExtensionComplex greduit1() {
  auto base = validate_complex({{"a", "b", "c"}, {"f", "c", "b"}, {"d", "f", "e"}, {"g", "a", "e"}});
  return build_extension_complex(base, {
                                           {0, "a", {{"b", {}}, {"c", {"y"}}}},
                                           {1, "f", {{"c", {}}, {"b", {"z"}}}},
                                           {2, "d", {{"f", {}}, {"e", {"x"}}}},
                                           {3, "g", {{"a", {}}, {"e", {"w"}}}},
                                       });
}

/// Facets [a,b,c] (origin a, points x, y) and [b,c,d] (origin d, points u, v).
inline ExtensionComplex cycles_pair() {
  auto base = validate_complex({{"a", "b", "c"}, {"b", "c", "d"}});
  return build_extension_complex(base, {
                                           {0, "a", {{"b", {"x"}}, {"c", {"y"}}}},
                                           {1, "d", {{"b", {"u"}}, {"c", {"v"}}}},
                                       });
}

}  // namespace binext::testing
