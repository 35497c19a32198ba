#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/parametric.hpp"
#include "mlink/pbf.hpp"
#include "mlink/probe.hpp"
#include "mlink/workspace.hpp"

namespace mlink {

// Logarithms are base 2 everywhere in the driver.
inline double log2_of(Index x) { return std::log2(static_cast<double>(x)); }

// True when one pbf(1, M, N) is already within the target bound:
// M(N-M) <= 4 N log(N-M).
inline bool small_instance(Index n, Index m) {
  const double lhs = static_cast<double>(m) * static_cast<double>(n - m);
  return lhs <= 4.0 * static_cast<double>(n) * log2_of(n - m);
}

// M split evenly into K stages: the first K' = K - (M mod K) get floor(M/K),
// the rest ceil(M/K).
struct StagePlan {
  Index total = 0;
  Index stages = 0;
  Index short_stages = 0;

  Index links(Index k) const {
    const Index base = total / stages;
    return k <= short_stages ? base : base + 1;
  }
};

inline StagePlan make_stage_plan(Index n, Index m) {
  const double ratio = static_cast<double>(m) * static_cast<double>(n - m) /
                       (static_cast<double>(n) * log2_of(n - m));
  StagePlan plan;
  plan.total = m;
  plan.stages = static_cast<Index>(std::ceil(std::sqrt(ratio)));
  plan.short_stages = plan.stages - m % plan.stages;
  return plan;
}

struct CcOptions {
  SptStrategy strategy = SptStrategy::Online;
  bool depths_on_original = false;
  bool self_check = false;
};

template <class T>
struct SolveStats {
  std::uint64_t base_evals = 0;
  std::size_t peak_cells = 0;
  Index stages = 0;  // stages entered (0 for the small-instance and degenerate paths)
  Index hits = 0;    // 1 when a probe returned the lambda
  bool small = false;
  std::vector<ProbeOutcome<T>> trace;
};

// A lambda inside the window of (M, N) on G_1, for 2 <= M <= N-2.
template <class T>
T find_lambda(const CostOracle<T>& base, Index m, DpWorkspace<T>& ws, const CcOptions& opt = {},
              SolveStats<T>* stats = nullptr) {
  const Index n = base.size();
  require(m >= 2 && m <= n - 2, "find_lambda: need 2 <= M <= N-2");
  SolveStats<T> local;
  SolveStats<T>& st = stats ? *stats : local;

  if (small_instance(n, m)) {
    st.small = true;
    pbf(ContractedView<T>(base), m, n, ws);
    return ws.fbar()[static_cast<std::size_t>(n)] - ws.f()[static_cast<std::size_t>(n)];
  }

  ensure(m > 16 && m < n - 16, "find_lambda: gate arithmetic violated");
  const StagePlan plan = make_stage_plan(n, m);
  ensure(plan.stages > 2 && plan.stages * plan.stages < m, "find_lambda: stage count out of range");

  const ProbeOptions popt{opt.strategy, opt.depths_on_original, opt.self_check};
  SolverState<T> state(base, ws, m);
  for (Index k = 1; k < plan.stages; ++k) {
    ensure(state.remaining <= n - state.s - 1, "find_lambda: stage invariant M <= N - s - 1 violated");
    const Index links = plan.links(k);
    ensure(links >= 4, "find_lambda: stage with fewer than 4 links");
    ++st.stages;
    ProbeOutcome<T> out = probe(state, links, popt);
    st.trace.push_back(out);
    if (out.hit) {
      st.hits = 1;
      return out.lambda;
    }
  }
  ensure(state.remaining == plan.links(plan.stages), "find_lambda: last stage budget mismatch");
  ensure(state.remaining <= n - state.s - 1, "find_lambda: stage invariant M <= N - s - 1 violated");
  ++st.stages;
  pbf(state.view(), state.remaining, n, ws);
  return ws.fbar()[static_cast<std::size_t>(n)] - ws.f()[static_cast<std::size_t>(n)];
}

template <class T>
struct SolveResult {
  LinkPath<T> path;
  SolveStats<T> stats;
};

namespace detail {

// M = N-2: drop the internal node whose removal costs least.
template <class T>
LinkPath<T> drop_one_node(const CostOracle<T>& c) {
  const Index n = c.size();
  T full{};
  for (Index i = 1; i < n; ++i) full += c(i, i + 1);
  Index best = 2;
  T best_delta{};
  for (Index k = 2; k < n; ++k) {
    const T d = c(k - 1, k + 1) - c(k - 1, k) - c(k, k + 1);
    if (k == 2 || d < best_delta) {
      best = k;
      best_delta = d;
    }
  }
  LinkPath<T> p;
  for (Index v = 1; v <= n; ++v)
    if (v != best) p.nodes.push_back(v);
  p.length = full + best_delta;
  return p;
}

// M = 2: the best single midpoint.
template <class T>
LinkPath<T> best_midpoint(const CostOracle<T>& c) {
  const Index n = c.size();
  Index best = 2;
  T best_len{};
  for (Index k = 2; k < n; ++k) {
    const T len = c(1, k) + c(k, n);
    if (k == 2 || len < best_len) {
      best = k;
      best_len = len;
    }
  }
  return LinkPath<T>{{1, best, n}, best_len};
}

}  // namespace detail

// Shortest M-link 1-N path. The four degenerate budgets are linear scans;
// everything else goes through find_lambda and extraction on G_1.
template <class T>
SolveResult<T> shortest_m_link_path(const CostOracle<T>& base, Index m, const CcOptions& opt = {}) {
  const Index n = base.size();
  require(m >= 1 && m <= n - 1, "shortest_m_link_path: need 1 <= M <= N-1");
  const std::uint64_t evals_before = base.evals();
  SolveResult<T> out;

  if (m == n - 1) {
    std::vector<Index> all(static_cast<std::size_t>(n));
    for (Index v = 1; v <= n; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    out.path = make_path(base, std::move(all));
  } else if (m == 1) {
    out.path = LinkPath<T>{{1, n}, base(1, n)};
  } else if (m == 2) {
    out.path = detail::best_midpoint(base);
  } else if (m == n - 2) {
    out.path = detail::drop_one_node(base);
  } else {
    DpWorkspace<T> ws(n);
    const T lambda = find_lambda(base, m, ws, opt, &out.stats);
    out.path = extract_path(base, lambda, m, ws, opt.strategy);
    out.stats.peak_cells = ws.peak_cells();
  }
  out.stats.base_evals = base.evals() - evals_before;
  return out;
}

}  // namespace mlink
