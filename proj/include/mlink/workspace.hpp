#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mlink/arena.hpp"
#include "mlink/types.hpp"

namespace mlink {

// All auxiliary storage of one solve: four cost buffers indexed by node
// (f, fbar, h and the shortest-path-tree values F) plus an index arena of
// 4(N+1) cells for every other piece of scratch. Nothing in the solver path
// allocates outside of this object.
template <class T>
class DpWorkspace {
 public:
  explicit DpWorkspace(Index n)
      : n_(n),
        f_(cells(n)),
        fbar_(cells(n)),
        h_(cells(n)),
        tree_(cells(n)),
        arena_(4 * cells(n)) {
    require(n >= 2, "DpWorkspace: N must be >= 2");
  }

  Index size() const { return n_; }

  std::span<T> f() { return f_; }
  std::span<T> fbar() { return fbar_; }
  std::span<T> h() { return h_; }
  std::span<T> tree() { return tree_; }
  std::span<const T> f() const { return f_; }
  std::span<const T> fbar() const { return fbar_; }
  std::span<const T> h() const { return h_; }

  // O(1) exchange of the two DP layers.
  void swap_layers() { std::swap(f_, fbar_); }

  IndexArena& arena() { return arena_; }

  // Peak auxiliary cells: the four cost buffers plus the arena high-water mark.
  std::size_t peak_cells() const { return 4 * cells(n_) + arena_.high_water(); }

  // Valid ranges of f / fbar after the most recent pbf call.
  struct Range {
    Index lo = 1;
    Index hi = 0;
    bool contains(Index j) const { return j >= lo && j <= hi; }
  };
  Range f_valid, fbar_valid;

 private:
  static std::size_t cells(Index n) { return static_cast<std::size_t>(n + 1); }

  Index n_;
  std::vector<T> f_, fbar_, h_, tree_;
  IndexArena arena_;
};

}  // namespace mlink
