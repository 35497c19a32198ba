#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/extended_cost.hpp"
#include "mlink/spt.hpp"
#include "mlink/workspace.hpp"

namespace mlink {

// [delta(m-1, n), delta(m, n)]: the lambdas for which some shortest s-n path
// of G_s(lambda) has exactly m links. Infinite endpoints are never members.
template <class T>
struct DeltaWindow {
  ExtendedCost<T> lo;
  ExtendedCost<T> hi;

  bool contains(T lambda) const { return lo <= ExtendedCost<T>(lambda) && ExtendedCost<T>(lambda) <= hi; }
  bool operator==(const DeltaWindow&) const = default;
};

// Where lambda sits relative to the window of M links at N.
enum class WindowPosition { Below, Inside, Above };

inline const char* position_name(WindowPosition p) {
  switch (p) {
    case WindowPosition::Below: return "below";
    case WindowPosition::Inside: return "inside";
    case WindowPosition::Above: return "above";
  }
  return "?";
}

struct Classification {
  WindowPosition position = WindowPosition::Inside;
  Index dmin = 0;
  std::optional<Index> dmax;  // only computed when dmin <= M
};

// Above when d_min(lambda, N) > M (lambda beyond the window's upper end),
// Below when d_max(lambda, N) < M, Inside otherwise.
template <class T>
Classification classify(const ContractedView<T>& view, T lambda, Index m, DpWorkspace<T>& ws,
                        SptStrategy strategy = SptStrategy::Online) {
  require(m >= 1 && m <= view.size() - view.root(), "classify: need 1 <= M <= N - s");
  const ContractedView<T> shifted = view.with_lambda(lambda);
  Classification out;
  out.dmin = extreme_depth(shifted, SptMode::Min, ws, strategy);
  if (out.dmin > m) {
    out.position = WindowPosition::Above;
    return out;
  }
  out.dmax = extreme_depth(shifted, SptMode::Max, ws, strategy);
  out.position = *out.dmax < m ? WindowPosition::Below : WindowPosition::Inside;
  return out;
}

template <class T>
Classification classify(const CostOracle<T>& base, T lambda, Index m, SptStrategy strategy = SptStrategy::Online) {
  DpWorkspace<T> ws(base.size());
  return classify(ContractedView<T>(base), lambda, m, ws, strategy);
}

namespace detail {

// Least k in [1:m1] with p[k] >= q[m - m1 + k].
inline Index swap_point(std::span<const Index> q, std::span<const Index> p, Index m) {
  const Index m1 = static_cast<Index>(p.size()) - 1;
  const Index m2 = static_cast<Index>(q.size()) - 1;
  require(m1 >= 1 && m1 <= m2, "path swap: need 1 <= m1 <= m2");
  require(m >= m1 && m <= m2, "path swap: m outside [m1:m2]");
  require(p.front() <= q.front() && q.front() < q.back() && q.back() <= p.back(),
          "path swap: need u0 <= v0 < v_m2 <= u_m1");
  require(strictly_increasing(p) && strictly_increasing(q), "path swap: paths must be strictly increasing");
  for (Index k = 1; k <= m1; ++k) {
    if (p[static_cast<std::size_t>(k)] >= q[static_cast<std::size_t>(m - m1 + k)]) return k;
  }
  throw InternalError("path swap: no crossing point");
}

inline void swap_plus_into(std::span<const Index> q, std::span<const Index> p, Index m, std::span<Index> out) {
  const Index k = swap_point(q, p, m);
  const Index m1 = static_cast<Index>(p.size()) - 1;
  std::size_t w = 0;
  for (Index t = 0; t <= m - m1 + k - 1; ++t) out[w++] = q[static_cast<std::size_t>(t)];
  for (Index t = k; t <= m1; ++t) out[w++] = p[static_cast<std::size_t>(t)];
}

}  // namespace detail

// Q (+)_m P: an m-link path from v0 to u_m1, built by exchanging one edge of
// each path at their first crossing. P has m1 links, Q has m2 >= m1.
inline std::vector<Index> swap_plus(std::span<const Index> q, std::span<const Index> p, Index m) {
  std::vector<Index> out(static_cast<std::size_t>(m + 1));
  detail::swap_plus_into(q, p, m, out);
  return out;
}

// Q (-)_m P: the complementary (m1 + m2 - m)-link path from u0 to v_m2.
inline std::vector<Index> swap_minus(std::span<const Index> q, std::span<const Index> p, Index m) {
  const Index k = detail::swap_point(q, p, m);
  const Index m1 = static_cast<Index>(p.size()) - 1;
  const Index m2 = static_cast<Index>(q.size()) - 1;
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(m1 + m2 - m + 1));
  for (Index t = 0; t <= k - 1; ++t) out.push_back(p[static_cast<std::size_t>(t)]);
  for (Index t = m - m1 + k; t <= m2; ++t) out.push_back(q[static_cast<std::size_t>(t)]);
  return out;
}

template <class T, class Cost>
LinkPath<T> swap_plus(const LinkPath<T>& q, const LinkPath<T>& p, Index m, const Cost& cost) {
  return make_path(cost, swap_plus(q.nodes, p.nodes, m));
}

template <class T, class Cost>
LinkPath<T> swap_minus(const LinkPath<T>& q, const LinkPath<T>& p, Index m, const Cost& cost) {
  return make_path(cost, swap_minus(q.nodes, p.nodes, m));
}

// Shortest M-link 1-N path on the original graph, given a lambda inside the
// window of (M, N): swap the root-N paths of the minimal and maximal trees of
// G_1(lambda). The returned length is measured with the unshifted costs.
template <class T>
LinkPath<T> extract_path(const CostOracle<T>& base, T lambda, Index m, DpWorkspace<T>& ws,
                         SptStrategy strategy = SptStrategy::Online) {
  const Index n = base.size();
  require(m >= 1 && m <= n - 1, "extract_path: need 1 <= M <= N-1");
  const ContractedView<T> view(base, lambda);
  IndexArena& arena = ws.arena();
  auto scope = arena.scope();
  std::span<Index> parent = arena.take(static_cast<std::size_t>(n + 1));

  auto root_path = [&](SptMode mode) {
    build_tree(view, mode, strategy, ws.tree(), parent, arena);
    Index depth = 0;
    for (Index v = n; v != 1; v = parent[static_cast<std::size_t>(v)]) ++depth;
    std::span<Index> nodes = arena.take(static_cast<std::size_t>(depth + 1));
    Index v = n;
    for (Index k = depth; k >= 0; --k) {
      nodes[static_cast<std::size_t>(k)] = v;
      v = parent[static_cast<std::size_t>(v)];
    }
    return nodes;
  };

  std::span<Index> shallow = root_path(SptMode::Min);
  const Index dmin = static_cast<Index>(shallow.size()) - 1;
  std::span<Index> deep;
  Index dmax = -1;
  if (dmin <= m) {
    deep = root_path(SptMode::Max);
    dmax = static_cast<Index>(deep.size()) - 1;
  }
  if (dmin > m || dmax < m) {
    std::ostringstream msg;
    msg << "extract_path: lambda not in the window of M=" << m << " (d_min=" << dmin;
    if (dmax >= 0) msg << ", d_max=" << dmax;
    msg << ")";
    throw PreconditionError(msg.str());
  }
  return make_path(base, swap_plus(deep, shallow, m));
}

template <class T>
LinkPath<T> extract_path(const CostOracle<T>& base, T lambda, Index m, SptStrategy strategy = SptStrategy::Online) {
  DpWorkspace<T> ws(base.size());
  return extract_path(base, lambda, m, ws, strategy);
}

}  // namespace mlink
