#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/extended_cost.hpp"
#include "mlink/parametric.hpp"
#include "mlink/smawk.hpp"

namespace mlink {

// Reference solvers. They are slow on purpose and share no code with the
// contract-and-conquer path except SMAWK.

// Full table of the standard O(NM) dynamic program from node 1:
// value(k, n) = f_1(k, n) for 1 <= k <= M and k+1 <= n <= N.
template <class T>
class DpTable {
 public:
  Index size() const { return n_; }
  Index links() const { return m_; }

  T value(Index k, Index n) const {
    require(k >= 1 && k <= m_ && n >= k + 1 && n <= n_, "DpTable: (k, n) out of range");
    return f_[cell(k, n)];
  }

  // One optimal k-link 1-n path, by following the stored parents.
  LinkPath<T> path(Index k, Index n) const {
    require(k >= 1 && k <= m_ && n >= k + 1 && n <= n_, "DpTable: (k, n) out of range");
    LinkPath<T> p;
    p.nodes.resize(static_cast<std::size_t>(k + 1));
    p.length = value(k, n);
    Index v = n;
    for (Index t = k; t >= 1; --t) {
      p.nodes[static_cast<std::size_t>(t)] = v;
      v = parent_[cell(t, v)];
    }
    p.nodes[0] = v;
    return p;
  }

 private:
  template <class U>
  friend DpTable<U> dp_full(const CostOracle<U>&, Index);

  std::size_t cell(Index k, Index n) const { return static_cast<std::size_t>((k - 1) * (n_ + 1) + n); }

  Index n_ = 0;
  Index m_ = 0;
  std::vector<T> f_;
  std::vector<Index> parent_;
};

template <class T>
DpTable<T> dp_full(const CostOracle<T>& o, Index m) {
  const Index n = o.size();
  require(m >= 1 && m <= n - 1, "dp_full: need 1 <= M <= N-1");
  DpTable<T> t;
  t.n_ = n;
  t.m_ = m;
  t.f_.assign(static_cast<std::size_t>(m * (n + 1)), T{});
  t.parent_.assign(t.f_.size(), 0);
  for (Index j = 2; j <= n; ++j) {
    t.f_[t.cell(1, j)] = o(1, j);
    t.parent_[t.cell(1, j)] = 1;
  }
  for (Index k = 2; k <= m; ++k) {
    auto eval = [&](Index j, Index i) { return t.f_[t.cell(k - 1, i)] + o(i, j); };
    auto sink = [&](Index j, Index i, T v) {
      t.f_[t.cell(k, j)] = v;
      t.parent_[t.cell(k, j)] = i;
    };
    row_minima(MatrixShape{k + 1, n, k, n - 1, true}, eval, TieRule::Leftmost, sink);
  }
  return t;
}

// f_1(M, N) with two rows of storage. Evaluates exactly what dp_full does.
// `peak_cells`, when given, receives the auxiliary cells used.
template <class T>
T dp_length(const CostOracle<T>& o, Index m, std::size_t* peak_cells = nullptr) {
  const Index n = o.size();
  require(m >= 1 && m <= n - 1, "dp_length: need 1 <= M <= N-1");
  std::vector<T> prev(static_cast<std::size_t>(n + 1)), next(prev.size());
  IndexArena arena(static_cast<std::size_t>(3 * n));
  for (Index j = 2; j <= n; ++j) prev[static_cast<std::size_t>(j)] = o(1, j);
  for (Index k = 2; k <= m; ++k) {
    auto eval = [&](Index j, Index i) { return prev[static_cast<std::size_t>(i)] + o(i, j); };
    auto sink = [&](Index j, Index, T v) { next[static_cast<std::size_t>(j)] = v; };
    row_minima(MatrixShape{k + 1, n, k, n - 1, true}, eval, TieRule::Leftmost, sink, arena);
    std::swap(prev, next);
  }
  if (peak_cells) *peak_cells = prev.size() + next.size() + arena.high_water();
  return prev[static_cast<std::size_t>(n)];
}

// Exhaustive ground truth on a DAG rooted at s with nodes [s:n]: every
// s-j path for every j is enumerated.
template <class T>
class BruteForce {
 public:
  static constexpr Index kMaxNodes = 14;

  Index root() const { return s_; }
  Index size() const { return n_; }

  // f_s(k, j); +inf when no k-link path exists.
  ExtendedCost<T> f(Index k, Index j) const {
    check_node(j);
    if (k < 1 || k > j - s_) return ExtendedCost<T>::pos_inf();
    return best_[slot(k, j)];
  }

  // delta_s(k, j) for 0 <= k <= j - s, with the infinite endpoints.
  ExtendedCost<T> delta(Index k, Index j) const {
    check_node(j);
    require(k >= 0 && k <= j - s_, "BruteForce::delta: k out of range");
    if (k == 0) return ExtendedCost<T>::neg_inf();
    if (k == j - s_) return ExtendedCost<T>::pos_inf();
    return ExtendedCost<T>(f(k + 1, j).value() - f(k, j).value());
  }

  DeltaWindow<T> window(Index k, Index j) const {
    require(k >= 1 && k <= j - s_, "BruteForce::window: k out of range");
    return {delta(k - 1, j), delta(k, j)};
  }

  // Least and greatest link counts among shortest s-j paths of G_s(lambda).
  Index dmin(T lambda, Index j) const { return extreme(lambda, j, false); }
  Index dmax(T lambda, Index j) const { return extreme(lambda, j, true); }

  // Shortest length of G_s(lambda) to j, over all link counts.
  T shifted_optimum(T lambda, Index j) const {
    check_node(j);
    T best{};
    for (Index k = 1; k <= j - s_; ++k) {
      const T v = best_[slot(k, j)] - static_cast<T>(k) * lambda;
      if (k == 1 || v < best) best = v;
    }
    return best;
  }

  const std::vector<std::vector<Index>>& optimal_paths(Index k, Index j) const {
    check_node(j);
    require(k >= 1 && k <= j - s_, "BruteForce::optimal_paths: k out of range");
    return paths_[slot(k, j)];
  }

  std::uint64_t path_count(Index k, Index j) const {
    check_node(j);
    require(k >= 1 && k <= j - s_, "BruteForce::path_count: k out of range");
    return count_[slot(k, j)];
  }

  template <class Cost>
  static BruteForce build(const Cost& cost, Index s, Index n) {
    require(s >= 1 && s < n, "brute_force: need 1 <= s < N");
    require(n - s + 1 <= kMaxNodes, "brute_force: at most 14 nodes");
    BruteForce b;
    b.s_ = s;
    b.n_ = n;
    const Index span_nodes = n - s;
    const auto slots = static_cast<std::size_t>((span_nodes + 1) * (span_nodes + 1));
    b.best_.assign(slots, T{});
    b.paths_.assign(slots, {});
    b.count_.assign(slots, 0);
    std::vector<Index> nodes;
    for (Index j = s + 1; j <= n; ++j) {
      const Index inner = j - s - 1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
        nodes.assign(1, s);
        for (Index b2 = 0; b2 < inner; ++b2)
          if (mask >> b2 & 1) nodes.push_back(s + 1 + b2);
        nodes.push_back(j);
        T len{};
        for (std::size_t e = 0; e + 1 < nodes.size(); ++e) len += cost(nodes[e], nodes[e + 1]);
        const Index k = static_cast<Index>(nodes.size()) - 1;
        const std::size_t at = b.slot(k, j);
        if (b.count_[at] == 0 || len < b.best_[at]) {
          b.best_[at] = len;
          b.paths_[at].clear();
        }
        if (len == b.best_[at]) b.paths_[at].push_back(nodes);
        ++b.count_[at];
      }
    }
    return b;
  }

 private:
  std::size_t slot(Index k, Index j) const { return static_cast<std::size_t>(k * (n_ - s_ + 1) + (j - s_)); }

  void check_node(Index j) const { require(j > s_ && j <= n_, "BruteForce: node out of range"); }

  Index extreme(T lambda, Index j, bool greatest) const {
    const T opt = shifted_optimum(lambda, j);
    Index found = 0;
    for (Index k = 1; k <= j - s_; ++k) {
      if (best_[slot(k, j)] - static_cast<T>(k) * lambda == opt) {
        if (!greatest) return k;
        found = k;
      }
    }
    return found;
  }

  Index s_ = 1;
  Index n_ = 0;
  std::vector<T> best_;
  std::vector<std::vector<std::vector<Index>>> paths_;
  std::vector<std::uint64_t> count_;
};

template <class T>
BruteForce<T> brute_force(const CostOracle<T>& o) {
  return BruteForce<T>::build([&](Index i, Index j) { return o.peek(i, j); }, 1, o.size());
}

template <class T>
BruteForce<T> brute_force(const ContractedView<T>& v) {
  return BruteForce<T>::build(v, v.root(), v.size());
}

}  // namespace mlink
