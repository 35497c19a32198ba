#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "mlink/cost_oracle.hpp"
#include "mlink/types.hpp"

namespace mlink {

enum class CheckMode { Exhaustive, Adjacent };

struct MongeCheck {
  bool ok = true;
  // First violating (i, j, k, l) with i < j < k < l, when !ok.
  std::array<Index, 4> quad{};
};

namespace detail {

template <class Cost>
bool quad_holds(const Cost& c, Index i, Index j, Index k, Index l) {
  return c(i, l) + c(j, k) >= c(i, k) + c(j, l);
}

}  // namespace detail

// Checks c(i,l) + c(j,k) >= c(i,k) + c(j,l) for s <= i < j < k < l <= n.
// Adjacent mode only checks quadruples (i, i+1, k, k+1); those sum up to
// every other quadruple, so the two modes agree.
template <class Cost>
MongeCheck verify_submodular(const Cost& c, Index s, Index n, CheckMode mode) {
  require(n - s + 1 >= 2, "verify_submodular: need at least 2 nodes");
  MongeCheck out;
  if (mode == CheckMode::Exhaustive) {
    require(n - s + 1 <= 64, "verify_submodular: exhaustive mode limited to 64 nodes");
    for (Index i = s; i <= n; ++i)
      for (Index j = i + 1; j <= n; ++j)
        for (Index k = j + 1; k <= n; ++k)
          for (Index l = k + 1; l <= n; ++l)
            if (!detail::quad_holds(c, i, j, k, l)) return MongeCheck{false, {i, j, k, l}};
    return out;
  }
  for (Index i = s; i + 1 <= n; ++i)
    for (Index k = i + 2; k + 1 <= n; ++k)
      if (!detail::quad_holds(c, i, i + 1, k, k + 1)) return MongeCheck{false, {i, i + 1, k, k + 1}};
  return out;
}

template <class T>
MongeCheck verify_submodular(const CostOracle<T>& c, CheckMode mode) {
  return verify_submodular(c, 1, c.size(), mode);
}

template <class T>
MongeCheck verify_submodular(const ContractedView<T>& v, CheckMode mode) {
  return verify_submodular(v, v.root(), v.size(), mode);
}

// Random adjacent quadruples; cheap enough to run before every large solve.
template <class Cost>
MongeCheck verify_submodular_sampled(const Cost& c, Index s, Index n, Index samples, std::uint64_t seed) {
  if (n - s + 1 < 4) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick_i(s, n - 3);
  for (Index t = 0; t < samples; ++t) {
    const Index i = pick_i(rng);
    const Index k = std::uniform_int_distribution<Index>(i + 2, n - 1)(rng);
    if (!detail::quad_holds(c, i, i + 1, k, k + 1)) return MongeCheck{false, {i, i + 1, k, k + 1}};
  }
  return {};
}

}  // namespace mlink
