#pragma once

#include "mlink/cost_oracle.hpp"
#include "mlink/smawk.hpp"
#include "mlink/workspace.hpp"

namespace mlink {

// Parsimonious Bellman-Ford on G_s: fills ws.f(j) = f_s(m, j) for
// j in [s+m : n] and ws.fbar(j) = f_s(m+1, j) for j in [s+m+1 : n], where
// f_s(k, j) is the shortest k-link s-j length. Only the entries the two
// output layers depend on are computed: layer k covers [s+k : n-m+k].
template <class T>
void pbf(const ContractedView<T>& view, Index m, Index n, DpWorkspace<T>& ws) {
  const Index s = view.root();
  require(m >= 1, "pbf: m must be >= 1");
  require(s + m < n && n <= view.size(), "pbf: need s + m < n <= N");
  require(ws.size() == view.size(), "pbf: workspace size mismatch");

  {
    auto f = ws.f();
    for (Index j = s + 1; j <= n - m + 1; ++j) f[static_cast<std::size_t>(j)] = view(s, j);
  }

  auto relax = [&](Index row_lo, Index row_hi, Index col_lo) {
    std::span<const T> f = ws.f();
    std::span<T> fbar = ws.fbar();
    auto eval = [&](Index j, Index i) { return f[static_cast<std::size_t>(i)] + view(i, j); };
    auto sink = [&](Index j, Index, T v) { fbar[static_cast<std::size_t>(j)] = v; };
    MatrixShape shape{row_lo, row_hi, col_lo, row_hi - 1, true};
    row_minima(shape, eval, TieRule::Leftmost, sink, ws.arena());
  };

  for (Index k = 2; k <= m; ++k) {
    relax(s + k, n - m + k, s + k - 1);
    ws.swap_layers();
  }
  relax(s + m + 1, n, s + m);

  ws.f_valid = {s + m, n};
  ws.fbar_valid = {s + m + 1, n};
}

}  // namespace mlink
