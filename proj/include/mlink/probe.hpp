#pragma once

#include <algorithm>
#include <vector>

#include "mlink/cost_oracle.hpp"
#include "mlink/pbf.hpp"
#include "mlink/smawk.hpp"
#include "mlink/spt.hpp"
#include "mlink/workspace.hpp"

namespace mlink {

struct ProbeOptions {
  SptStrategy strategy = SptStrategy::Online;
  // Answer the depth queries on G_1 against the original M instead of on the
  // contracted view against the remaining M. Both decide the same questions.
  bool depths_on_original = false;
  // Recompute inherited DP buffers and the Monge condition of a fresh
  // contraction, throwing InternalError on mismatch. Costs extra evaluations.
  bool self_check = false;
};

// The contract-and-conquer state: the current Monge DAG G_s (root s, edges
// out of s read ws.h once contracted) and the link budget still to place.
template <class T>
struct SolverState {
  SolverState(const CostOracle<T>& base_oracle, DpWorkspace<T>& workspace, Index links)
      : base(&base_oracle), ws(&workspace), remaining(links), total(links) {}

  const CostOracle<T>* base;
  DpWorkspace<T>* ws;
  Index s = 1;
  Index remaining;
  Index total;
  bool contracted = false;

  Index size() const { return base->size(); }

  ContractedView<T> view() const {
    if (!contracted) return ContractedView<T>(*base);
    return ContractedView<T>(*base, s, std::span<const T>(ws->h()));
  }
};

template <class T>
struct ProbeOutcome {
  bool hit = false;
  T lambda{};       // a member of the window when hit
  Index pivot = 0;  // r when contracted
  Index m = 0;
  Index root_before = 0;
  Index samples = 0;  // depth queries issued
};

namespace detail {

template <class T>
class Prober {
 public:
  Prober(SolverState<T>& state, Index m, const ProbeOptions& opt) : st_(state), m_(m), opt_(opt) {}

  ProbeOutcome<T> run() {
    const Index s = st_.s;
    const Index n_total = st_.size();
    const Index big_m = st_.remaining;
    out_.m = m_;
    out_.root_before = s;

    // Exponential search over (lo : hi], which always contains the pivot.
    Index lo = s + m_;
    Index hi = n_total - big_m + m_;
    Index step = 1;
    Index cand = 0;
    Index depth = 0;
    for (;;) {
      cand = std::min(lo + step, hi);
      pbf(st_.view(), m_, cand, *st_.ws);
      const T lambda = delta_at(cand);
      depth = min_depth(lambda);
      if (depth == target()) return hit(lambda);
      if (depth < target()) break;
      ensure(cand < hi, "probe: exponential search left the interval without bracketing the pivot");
      lo = cand;
      step *= 2;
    }
    hi = cand;
    if (opt_.self_check) check_inherited(hi);

    while (hi - lo > 1) {
      const Index mid = lo + (hi - lo + 1) / 2;
      const T lambda = delta_at(mid);
      depth = min_depth(lambda);
      if (depth == target()) return hit(lambda);
      if (depth > target()) {
        lo = mid;
      } else {
        hi = mid;
      }
    }

    const Index r = hi;
    const T lambda = delta_at(r);
    if (max_depth(lambda) >= target()) return hit(lambda);

    contract(r);
    out_.pivot = r;
    return out_;
  }

 private:
  Index target() const { return opt_.depths_on_original ? st_.total : st_.remaining; }

  ContractedView<T> depth_view(T lambda) const {
    if (opt_.depths_on_original) return ContractedView<T>(*st_.base, lambda);
    return st_.view().with_lambda(lambda);
  }

  Index min_depth(T lambda) {
    ++out_.samples;
    return extreme_depth(depth_view(lambda), SptMode::Min, *st_.ws, opt_.strategy);
  }

  Index max_depth(T lambda) {
    ++out_.samples;
    return extreme_depth(depth_view(lambda), SptMode::Max, *st_.ws, opt_.strategy);
  }

  T delta_at(Index n) const {
    const auto k = static_cast<std::size_t>(n);
    ensure(st_.ws->f_valid.contains(n) && st_.ws->fbar_valid.contains(n), "probe: DP buffers not valid here");
    return st_.ws->fbar()[k] - st_.ws->f()[k];
  }

  ProbeOutcome<T> hit(T lambda) {
    out_.hit = true;
    out_.lambda = lambda;
    return out_;
  }

  void check_inherited(Index hi) const {
    DpWorkspace<T> fresh(st_.size());
    pbf(st_.view(), m_, hi, fresh);
    for (Index j = st_.s + m_; j <= hi; ++j) {
      const auto k = static_cast<std::size_t>(j);
      ensure(fresh.f()[k] == st_.ws->f()[k], "probe: inherited f differs from a fresh pbf");
      if (j > st_.s + m_) ensure(fresh.fbar()[k] == st_.ws->fbar()[k], "probe: inherited fbar differs");
    }
  }

  // h(j) = min over i in [s+m : r-1] of f(i) + c_s(i, j), for j in [r : N];
  // then r-1 becomes the root. Edges out of i > s never read h, so h can be
  // overwritten in place.
  void contract(Index r) {
    const Index s = st_.s;
    const Index n_total = st_.size();
    const ContractedView<T> view = st_.view();
    DpWorkspace<T>& ws = *st_.ws;
    std::span<const T> f = ws.f();
    std::span<T> h = ws.h();
    auto eval = [&](Index j, Index i) { return f[static_cast<std::size_t>(i)] + view(i, j); };
    auto sink = [&](Index j, Index, T v) { h[static_cast<std::size_t>(j)] = v; };
    row_minima(MatrixShape{r, n_total, s + m_, r - 1, false}, eval, TieRule::Leftmost, sink, ws.arena());

    st_.s = r - 1;
    st_.remaining -= m_;
    st_.contracted = true;

    if (opt_.self_check) {
      const ContractedView<T> next = st_.view();
      for (Index j = r + 1; j + 1 <= n_total; ++j) {
        ensure(next(r - 1, j + 1) - next(r - 1, j) >= next(r, j + 1) - next(r, j),
               "probe: contracted graph is not Monge");
      }
    }
  }

  SolverState<T>& st_;
  Index m_;
  const ProbeOptions& opt_;
  ProbeOutcome<T> out_;
};

}  // namespace detail

// Hit-or-contract: either returns a lambda inside the window of the remaining
// budget (which equals the original window), or finds the pivot r (the least
// n in (s+m : N-M+m] with delta_s(m, n) <= delta_s(M, N)), contracts G_s
// into G_{r-1} and spends m links.
template <class T>
ProbeOutcome<T> probe(SolverState<T>& state, Index m, const ProbeOptions& opt = {}) {
  const Index n = state.size();
  require(state.remaining >= 4 && state.remaining <= n - state.s - 1, "probe: need 4 <= M <= N - s - 1");
  require(m >= 2 && m <= state.remaining - 2, "probe: need 2 <= m <= M - 2");
  return detail::Prober<T>(state, m, opt).run();
}

}  // namespace mlink
