#pragma once

#include <span>
#include <vector>

#include "mlink/cc.hpp"
#include "mlink/generators.hpp"

namespace mlink {

struct Segmentation {
  // Segment k covers data[breaks[k-1] .. breaks[k]-1] with breaks[0] = 0 and
  // the last entry L; `breakpoints` lists the interior ones.
  std::vector<Index> breakpoints;
  std::vector<double> means;
  double sse = 0.0;
};

// Optimal M-segment piecewise-constant fit of `data`.
inline Segmentation segment(std::span<const double> data, Index m, const CcOptions& opt = {}) {
  require(m >= 1 && m <= static_cast<Index>(data.size()), "segment: need 1 <= M <= L");
  const CostOracle<double> cost = segmentation_oracle(data);
  const SolveResult<double> res = shortest_m_link_path(cost, m, opt);
  Segmentation out;
  out.sse = res.path.length;
  const auto& nodes = res.path.nodes;
  for (std::size_t k = 1; k + 1 < nodes.size(); ++k) out.breakpoints.push_back(nodes[k] - 1);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const auto lo = static_cast<std::size_t>(nodes[k] - 1);
    const auto hi = static_cast<std::size_t>(nodes[k + 1] - 1);
    double sum = 0.0;
    for (std::size_t t = lo; t < hi; ++t) sum += data[t];
    out.means.push_back(sum / static_cast<double>(hi - lo));
  }
  return out;
}

}  // namespace mlink
