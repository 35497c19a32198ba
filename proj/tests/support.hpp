#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mlink/mlink.hpp"

namespace mlink::testing {

using I64 = std::int64_t;

// Monge with many exact ties: a piecewise-linear convex gap plus tiny
// separable noise, so argmin sets are frequently larger than one.
inline CostOracle<I64> tie_heavy(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const I64 knee = std::uniform_int_distribution<I64>(1, 4)(rng);
  const I64 slope = std::uniform_int_distribution<I64>(1, 3)(rng);
  auto a = std::make_shared<std::vector<I64>>(static_cast<std::size_t>(n + 1));
  auto b = std::make_shared<std::vector<I64>>(static_cast<std::size_t>(n + 1));
  for (auto& x : *a) x = std::uniform_int_distribution<I64>(0, 2)(rng);
  for (auto& x : *b) x = std::uniform_int_distribution<I64>(0, 2)(rng);
  return CostOracle<I64>(n, [=](Index i, Index j) {
    const I64 d = j - i;
    return (d > knee ? slope * (d - knee) : 0) + (*a)[static_cast<std::size_t>(i)] + (*b)[static_cast<std::size_t>(j)];
  });
}

struct Named {
  std::string name;
  CostOracle<I64> cost;
};

// Instances used by the small exhaustive suites.
inline std::vector<Named> small_instances(Index n, int random_seeds, int tie_seeds = 0) {
  std::vector<Named> out;
  out.push_back({"convex-sq", gen_convex_square<I64>(n)});
  out.push_back({"linear", gen_linear<I64>(n)});
  for (int s = 0; s < random_seeds; ++s)
    out.push_back({"random/" + std::to_string(s), gen_random_monge<I64>(n, static_cast<std::uint64_t>(s))});
  for (int s = 0; s < tie_seeds; ++s)
    out.push_back({"ties/" + std::to_string(s), tie_heavy(n, static_cast<std::uint64_t>(s))});
  return out;
}

// lambdas that hit every finite delta endpoint, the gaps between them, and
// the region beyond both ends.
inline std::vector<I64> lambda_samples(const BruteForce<I64>& b) {
  std::set<I64> out;
  for (Index j = b.root() + 1; j <= b.size(); ++j)
    for (Index k = 1; k < j - b.root(); ++k) {
      const I64 d = b.delta(k, j).value();
      out.insert({d - 1, d, d + 1});
    }
  const I64 lo = out.empty() ? 0 : *out.begin();
  const I64 hi = out.empty() ? 0 : *out.rbegin();
  out.insert({lo - 1000, hi + 1000, 0});
  return {out.begin(), out.end()};
}

}  // namespace mlink::testing
