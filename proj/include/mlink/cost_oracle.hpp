#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mlink/types.hpp"

namespace mlink {

// Edge lengths c(i, j) of a complete DAG on [1:N], evaluated on demand.
//
// The evaluation counter is the unit of work reported everywhere in this
// library. It is a plain counter: an oracle must not be shared across
// threads while it is being evaluated (give each thread its own copy).
template <class T>
class CostOracle {
 public:
  using Value = T;
  using Fn = std::function<T(Index, Index)>;

  CostOracle() = default;
  CostOracle(Index n, Fn fn) : n_(n), fn_(std::move(fn)) { require(n >= 2, "CostOracle: N must be >= 2"); }

  Index size() const { return n_; }

  T operator()(Index i, Index j) const {
    ++evals_;
    return fn_(i, j);
  }

  // Evaluation without touching the counter, for diagnostics and printing.
  T peek(Index i, Index j) const { return fn_(i, j); }

  std::uint64_t evals() const { return evals_; }
  void reset_evals() const { evals_ = 0; }

 private:
  Index n_ = 0;
  Fn fn_;
  mutable std::uint64_t evals_ = 0;
};

// The Monge DAG G_s(lambda) seen by the solver: nodes [s:N], edges out of
// the root read the override buffer h (filled by a contraction), every other
// edge reads the base oracle, and lambda is subtracted from every length.
//
// h reads are not base evaluations: they were paid for when h was built.
template <class T>
class ContractedView {
 public:
  ContractedView() = default;

  explicit ContractedView(const CostOracle<T>& base, T lambda = T{})
      : base_(&base), s_(1), lambda_(lambda) {}

  // `h` is indexed by node and must be valid on [s+1:N].
  ContractedView(const CostOracle<T>& base, Index s, std::span<const T> h, T lambda = T{})
      : base_(&base), s_(s), h_(h), lambda_(lambda) {
    require(s >= 1 && s < base.size(), "ContractedView: root out of range");
    require(h.empty() || static_cast<Index>(h.size()) > base.size(), "ContractedView: h too small");
  }

  Index root() const { return s_; }
  Index size() const { return base_->size(); }
  T lambda() const { return lambda_; }
  bool contracted() const { return !h_.empty(); }
  const CostOracle<T>& base() const { return *base_; }
  std::span<const T> overrides() const { return h_; }

  ContractedView with_lambda(T lambda) const {
    ContractedView v = *this;
    v.lambda_ = lambda;
    return v;
  }

  T operator()(Index i, Index j) const {
    if (i == s_ && !h_.empty()) return h_[static_cast<std::size_t>(j)] - lambda_;
    return (*base_)(i, j) - lambda_;
  }

 private:
  const CostOracle<T>* base_ = nullptr;
  Index s_ = 1;
  std::span<const T> h_;
  T lambda_{};
};

// A strictly increasing node sequence and its total length under the cost
// it was produced with.
template <class T>
struct LinkPath {
  std::vector<Index> nodes;
  T length{};

  Index links() const { return static_cast<Index>(nodes.size()) - 1; }
  Index front() const { return nodes.front(); }
  Index back() const { return nodes.back(); }
};

template <class Cost>
auto path_length(const Cost& cost, std::span<const Index> nodes) {
  using V = decltype(cost(Index{}, Index{}));
  V total{};
  for (std::size_t k = 1; k < nodes.size(); ++k) total += cost(nodes[k - 1], nodes[k]);
  return total;
}

inline bool strictly_increasing(std::span<const Index> nodes) {
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    if (nodes[k] <= nodes[k - 1]) return false;
  }
  return true;
}

template <class Cost>
auto make_path(const Cost& cost, std::vector<Index> nodes) {
  using V = decltype(cost(Index{}, Index{}));
  LinkPath<V> p;
  p.length = path_length(cost, nodes);
  p.nodes = std::move(nodes);
  return p;
}

}  // namespace mlink
