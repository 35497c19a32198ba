#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/types.hpp"

namespace mlink {

// c(i, j) = g(j - i) for a convex gap function g on [1:N-1].
template <class T>
CostOracle<T> gen_convex_gap(Index n, std::function<T(Index)> g) {
  require(n >= 2, "gen_convex_gap: N must be >= 2");
  auto table = std::make_shared<std::vector<T>>(static_cast<std::size_t>(n));
  for (Index d = 1; d < n; ++d) (*table)[static_cast<std::size_t>(d)] = g(d);
  for (Index d = 2; d + 1 < n; ++d) {
    const auto& t = *table;
    const auto k = static_cast<std::size_t>(d);
    require(t[k + 1] - t[k] >= t[k] - t[k - 1], "gen_convex_gap: gap function is not convex");
  }
  return CostOracle<T>(n, [table](Index i, Index j) { return (*table)[static_cast<std::size_t>(j - i)]; });
}

template <class T>
CostOracle<T> gen_convex_square(Index n) {
  return gen_convex_gap<T>(n, [](Index d) { return static_cast<T>(d * d); });
}

template <class T>
CostOracle<T> gen_linear(Index n) {
  return gen_convex_gap<T>(n, [](Index d) { return static_cast<T>(d); });
}

// c(i, j) = g(j - i) + a_i + b_j with g convex (random non-negative second
// differences) and a, b arbitrary. The separable terms cancel in the
// quadrangle inequality, so the result is Monge for every seed. Values are
// integers even when T is floating point, and exact in double up to N ~ 10^6.
template <class T>
CostOracle<T> gen_random_monge(Index n, std::uint64_t seed) {
  require(n >= 2, "gen_random_monge: N must be >= 2");
  struct Tables {
    std::vector<std::int64_t> gap, a, b;
  };
  auto t = std::make_shared<Tables>();
  const auto size = static_cast<std::size_t>(n + 1);
  t->gap.assign(size, 0);
  t->a.assign(size, 0);
  t->b.assign(size, 0);

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  // Wide ranges keep exact ties in the marginal costs rare; with narrow ones
  // large instances degenerate into long runs of equal deltas.
  std::int64_t slope = uniform(-100000, 100000);
  t->gap[1] = uniform(0, 1000000);
  for (std::size_t d = 2; d < size; ++d) {
    t->gap[d] = t->gap[d - 1] + slope;
    slope += uniform(0, 10000);
  }
  for (std::size_t i = 1; i < size; ++i) {
    t->a[i] = uniform(0, 1000000);
    t->b[i] = uniform(0, 1000000);
  }
  return CostOracle<T>(n, [t](Index i, Index j) {
    const auto ii = static_cast<std::size_t>(i);
    const auto jj = static_cast<std::size_t>(j);
    return static_cast<T>(t->gap[jj - ii] + t->a[ii] + t->b[jj]);
  });
}

// Instance given as an explicit upper triangle: rows[i-1] holds
// c(i, i+1) ... c(i, N).
template <class T>
CostOracle<T> explicit_oracle(Index n, std::vector<std::vector<T>> rows) {
  require(n >= 2, "explicit_oracle: N must be >= 2");
  require(static_cast<Index>(rows.size()) == n - 1, "explicit_oracle: expected N-1 rows");
  for (Index i = 1; i < n; ++i) {
    require(static_cast<Index>(rows[static_cast<std::size_t>(i - 1)].size()) == n - i,
            "explicit_oracle: row i must hold N-i costs");
  }
  auto table = std::make_shared<std::vector<std::vector<T>>>(std::move(rows));
  return CostOracle<T>(n, [table](Index i, Index j) {
    return (*table)[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - i - 1)];
  });
}

// Interval sum of squared errors over `data`, with N = L + 1 nodes: edge
// (i, j) covers data[i-1 .. j-2] (0-based). A shortest M-link 1-N path is an
// optimal M-segment piecewise-constant fit.
inline CostOracle<double> segmentation_oracle(std::span<const double> data) {
  require(data.size() >= 2, "segmentation_oracle: need at least 2 data points");
  double mean = 0.0;
  for (double x : data) mean += x;
  mean /= static_cast<double>(data.size());

  // Centring first keeps the prefix sums small and makes constant data exact.
  struct Prefix {
    std::vector<double> sum, sq;
  };
  auto p = std::make_shared<Prefix>();
  p->sum.assign(data.size() + 1, 0.0);
  p->sq.assign(data.size() + 1, 0.0);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double x = data[k] - mean;
    p->sum[k + 1] = p->sum[k] + x;
    p->sq[k + 1] = p->sq[k] + x * x;
  }
  const auto n = static_cast<Index>(data.size()) + 1;
  return CostOracle<double>(n, [p](Index i, Index j) {
    const auto lo = static_cast<std::size_t>(i - 1);
    const auto hi = static_cast<std::size_t>(j - 1);
    const double len = static_cast<double>(hi - lo);
    const double s = p->sum[hi] - p->sum[lo];
    const double sse = (p->sq[hi] - p->sq[lo]) - s * s / len;
    return sse > 0.0 ? sse : 0.0;
  });
}

enum class Family { ConvexSquare, Linear, Random };

inline Family parse_family(const std::string& name) {
  if (name == "convex-sq") return Family::ConvexSquare;
  if (name == "linear") return Family::Linear;
  if (name == "random") return Family::Random;
  throw PreconditionError("unknown instance family '" + name + "'");
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::ConvexSquare: return "convex-sq";
    case Family::Linear: return "linear";
    case Family::Random: return "random";
  }
  return "?";
}

template <class T>
CostOracle<T> generate(Family family, Index n, std::uint64_t seed) {
  switch (family) {
    case Family::ConvexSquare: return gen_convex_square<T>(n);
    case Family::Linear: return gen_linear<T>(n);
    case Family::Random: return gen_random_monge<T>(n, seed);
  }
  throw PreconditionError("unknown instance family");
}

}  // namespace mlink
