#include "binext/poly/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace binext::poly {

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(const Series& a, const Series& b) {
  Series r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Series mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  Series r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Series shift(const Series& a, std::size_t k) {
  if (a.empty()) return {};
  Series r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

/// 1 - t^d
Series one_minus_power(std::uint32_t d) {
  Series r(d + 1, 0);
  r[0] += 1;
  r[d] -= 1;
  trim(r);
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) return false;
    }
  }
  return true;
}

Series numerator_rec(const std::vector<Monomial>& gens, std::size_t n) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  if (pairwise_coprime(gens)) {
    Series r{1};
    for (const auto& g : gens) r = mul(r, one_minus_power(g.degree()));
    return r;
  }
  std::vector<std::size_t> counts(n, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v] != 0) ++counts[v];
    }
  }
  std::size_t pivot = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());

  // M + (x)
  std::vector<Monomial> plus{Monomial::variable(n, pivot)};
  for (const auto& g : gens) {
    if (g[pivot] == 0) plus.push_back(g);
  }
  // M : x
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    if (q[pivot] != 0) q.set(pivot, static_cast<Monomial::Exponent>(q[pivot] - 1));
    colon.push_back(std::move(q));
  }
  return add(numerator_rec(minimalize(std::move(plus)), n),
             shift(numerator_rec(minimalize(std::move(colon)), n), 1));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens,
                                            std::size_t num_variables) {
  return numerator_rec(minimalize(gens), num_variables);
}

HilbertData hilbert_data(const std::vector<Monomial>& leading_monomials, std::size_t num_variables) {
  HilbertData data;
  data.numerator = hilbert_numerator(leading_monomials, num_variables);
  const int n = static_cast<int>(num_variables);
  if (data.numerator.empty()) {
    data.dimension = -1;
    data.codimension = n + 1;
    data.degree = 0;
    return data;
  }
  Series q = data.numerator;
  int cancelled = 0;
  while (std::accumulate(q.begin(), q.end(), std::int64_t{0}) == 0) {
    // q = (1 - t) * r  =>  r_k = q_0 + ... + q_k
    Series r(q.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      r[k] = run;
    }
    trim(r);
    q = std::move(r);
    ++cancelled;
  }
  data.codimension = cancelled;
  data.dimension = n - cancelled;
  data.reduced_numerator = q;
  data.degree = std::accumulate(q.begin(), q.end(), std::int64_t{0});
  return data;
}

std::int64_t hilbert_function(const std::vector<Monomial>& gens, std::size_t num_variables,
                              unsigned degree) {
  auto num = hilbert_numerator(gens, num_variables);
  const auto n = static_cast<std::int64_t>(num_variables);
  std::int64_t value = 0;
  for (std::size_t k = 0; k < num.size() && k <= degree; ++k) {
    const std::int64_t rest = static_cast<std::int64_t>(degree) - static_cast<std::int64_t>(k);
    const std::int64_t count = n == 0 ? (rest == 0 ? 1 : 0) : binomial(rest + n - 1, n - 1);
    value += num[k] * count;
  }
  return value;
}

namespace {

struct HittingSet {
  std::vector<std::vector<std::size_t>> supports;
  std::vector<bool> chosen;
  int best;

  bool hit(const std::vector<std::size_t>& s) const {
    return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; });
  }

  // Lower bound: greedy collection of pairwise disjoint unhit supports.
  int lower_bound() const {
    std::vector<bool> used(chosen.size(), false);
    int count = 0;
    for (const auto& s : supports) {
      if (hit(s)) continue;
      if (std::any_of(s.begin(), s.end(), [&](std::size_t v) { return used[v]; })) continue;
      for (auto v : s) used[v] = true;
      ++count;
    }
    return count;
  }

  void search(int size) {
    if (size >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      if (!hit(s) && (open == nullptr || s.size() < open->size())) open = &s;
    }
    if (open == nullptr) {
      best = size;
      return;
    }
    if (size + lower_bound() >= best) return;
    for (auto v : *open) {
      chosen[v] = true;
      search(size + 1);
      chosen[v] = false;
    }
  }
};

}  // namespace

int krull_dimension_lt(const std::vector<Monomial>& leading_monomials, std::size_t num_variables) {
  auto gens = minimalize(leading_monomials);
  for (const auto& g : gens) {
    if (g.is_one()) return -1;
  }
  HittingSet hs;
  for (const auto& g : gens) hs.supports.push_back(g.support());
  // Only inclusion-minimal supports matter.
  std::sort(hs.supports.begin(), hs.supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  std::vector<std::vector<std::size_t>> minimal;
  for (auto& s : hs.supports) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!redundant) minimal.push_back(std::move(s));
  }
  hs.supports = std::move(minimal);
  hs.chosen.assign(num_variables, false);
  hs.best = static_cast<int>(num_variables) + 1;
  hs.search(0);
  return static_cast<int>(num_variables) - hs.best;
}

}  // namespace binext::poly
