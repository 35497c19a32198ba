#pragma once

#include <span>
#include <vector>

#include "mlink/arena.hpp"
#include "mlink/cost_oracle.hpp"
#include "mlink/detail/online_minima.hpp"
#include "mlink/smawk.hpp"
#include "mlink/workspace.hpp"

namespace mlink {

// Min picks the least member of each argmin set (the shallowest tree),
// Max the greatest (the deepest tree).
enum class SptMode { Min, Max };

// How the tree values F are produced. Online is linear; DivideConquer costs an
// extra log factor and exists as an independent reference.
enum class SptStrategy { Online, DivideConquer };

inline TieRule tie_rule(SptMode mode) { return mode == SptMode::Min ? TieRule::Leftmost : TieRule::Rightmost; }

inline const char* strategy_name(SptStrategy s) { return s == SptStrategy::Online ? "online" : "dnc"; }

namespace detail {

template <class T>
void tree_online(const ContractedView<T>& view, SptMode mode, std::span<T> tree, std::span<Index> parent,
                 IndexArena& arena) {
  const Index s = view.root();
  const Index rows = view.size() - s;
  auto scope = arena.scope();
  // Row i is node s+1+i; column j is predecessor s+j.
  auto eval = [&](Index i, Index j) { return tree[static_cast<std::size_t>(s + j)] + view(s + j, s + 1 + i); };
  OnlineRowMinima<decltype(eval)> search(rows, eval, tie_rule(mode), arena);
  for (Index i = 0; i < rows; ++i) {
    const auto answer = search.next();
    const auto node = static_cast<std::size_t>(s + 1 + i);
    parent[node] = s + answer.col;
    tree[node] = answer.value;
  }
}

template <class T>
void tree_values_dnc(const ContractedView<T>& view, Index lo, Index hi, std::span<T> tree, IndexArena& arena) {
  if (lo >= hi) return;
  const Index mid = lo + (hi - lo) / 2;
  tree_values_dnc(view, lo, mid, tree, arena);
  // Every node's first contribution arrives through a call whose left half
  // starts at the root; later ones are merged with min.
  const bool first = lo == view.root();
  auto eval = [&](Index j, Index i) { return tree[static_cast<std::size_t>(i)] + view(i, j); };
  auto sink = [&](Index j, Index, T v) {
    T& slot = tree[static_cast<std::size_t>(j)];
    if (first || v < slot) slot = v;
  };
  row_minima(MatrixShape{mid + 1, hi, lo, mid, false}, eval, TieRule::Leftmost, sink, arena);
  tree_values_dnc(view, mid + 1, hi, tree, arena);
}

template <class T>
void tree_dnc(const ContractedView<T>& view, SptMode mode, std::span<T> tree, std::span<Index> parent,
              IndexArena& arena) {
  const Index s = view.root();
  const Index n = view.size();
  tree_values_dnc(view, s, n, tree, arena);
  // One more pass picks the parents under the tie rule, given final values.
  auto eval = [&](Index j, Index i) { return tree[static_cast<std::size_t>(i)] + view(i, j); };
  auto sink = [&](Index j, Index, T v) { ensure(v == tree[static_cast<std::size_t>(j)], "spt: inconsistent tree value"); };
  row_minima(MatrixShape{s + 1, n, s, n - 1, true}, eval, tie_rule(mode), sink,
             parent.subspan(static_cast<std::size_t>(s + 1), static_cast<std::size_t>(n - s)), arena);
}

}  // namespace detail

// Shortest-path tree of `view` (lambda included) from its root. `tree` and
// `parent` are indexed by node; afterwards tree[n] = F_s(n) and parent[n] is
// the least (Min) or greatest (Max) optimal predecessor of n.
template <class T>
void build_tree(const ContractedView<T>& view, SptMode mode, SptStrategy strategy, std::span<T> tree,
                std::span<Index> parent, IndexArena& arena) {
  const Index s = view.root();
  require(static_cast<Index>(tree.size()) > view.size() && static_cast<Index>(parent.size()) > view.size(),
          "build_tree: buffers must hold N+1 cells");
  tree[static_cast<std::size_t>(s)] = T{};
  parent[static_cast<std::size_t>(s)] = 0;
  if (strategy == SptStrategy::Online) {
    detail::tree_online(view, mode, tree, parent, arena);
  } else {
    detail::tree_dnc(view, mode, tree, parent, arena);
  }
}

// Depth of N in the minimal or maximal tree: d_min or d_max of N under the
// view's lambda. Uses ws.tree() and the arena; leaves f, fbar and h alone.
template <class T>
Index extreme_depth(const ContractedView<T>& view, SptMode mode, DpWorkspace<T>& ws,
                    SptStrategy strategy = SptStrategy::Online) {
  IndexArena& arena = ws.arena();
  auto scope = arena.scope();
  std::span<Index> parent = arena.take(static_cast<std::size_t>(view.size() + 1));
  build_tree(view, mode, strategy, ws.tree(), parent, arena);
  Index depth = 0;
  for (Index v = view.size(); v != view.root(); v = parent[static_cast<std::size_t>(v)]) ++depth;
  return depth;
}

template <class T>
struct SptResult {
  Index root = 1;
  SptMode mode = SptMode::Min;
  std::vector<T> tree;       // F on [root:N]
  std::vector<Index> parent;  // on [root+1:N]
};

template <class T>
SptResult<T> build_spt(const ContractedView<T>& view, SptMode mode, SptStrategy strategy = SptStrategy::Online) {
  const auto cells = static_cast<std::size_t>(view.size() + 1);
  SptResult<T> out{view.root(), mode, std::vector<T>(cells), std::vector<Index>(cells, 0)};
  IndexArena arena(3 * cells);
  build_tree(view, mode, strategy, std::span<T>(out.tree), std::span<Index>(out.parent), arena);
  return out;
}

template <class T>
Index depth_of(const SptResult<T>& res, Index n) {
  require(n >= res.root && n < static_cast<Index>(res.parent.size()), "depth_of: node out of range");
  Index depth = 0;
  for (Index v = n; v != res.root; v = res.parent[static_cast<std::size_t>(v)]) ++depth;
  return depth;
}

// Depths of every node by one forward sweep (parents precede children).
template <class T>
std::vector<Index> all_depths(const SptResult<T>& res) {
  std::vector<Index> depth(res.parent.size(), 0);
  for (std::size_t v = static_cast<std::size_t>(res.root) + 1; v < res.parent.size(); ++v)
    depth[v] = depth[static_cast<std::size_t>(res.parent[v])] + 1;
  return depth;
}

// Tree path root -> n; its length is F(n) in the view the tree was built on.
template <class T>
LinkPath<T> tree_path(const SptResult<T>& res, Index n) {
  require(n > res.root && n < static_cast<Index>(res.parent.size()), "tree_path: node out of range");
  LinkPath<T> p;
  p.nodes.resize(static_cast<std::size_t>(depth_of(res, n) + 1));
  Index v = n;
  for (auto it = p.nodes.rbegin(); it != p.nodes.rend(); ++it) {
    *it = v;
    v = res.parent[static_cast<std::size_t>(v)];
  }
  p.length = res.tree[static_cast<std::size_t>(n)];
  return p;
}

}  // namespace mlink
