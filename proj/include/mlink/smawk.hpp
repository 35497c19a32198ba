#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "mlink/arena.hpp"
#include "mlink/types.hpp"

namespace mlink {

// Which minimizer SMAWK reports when a row has several.
enum class TieRule { Leftmost, Rightmost };

// Shape of an implicitly defined matrix whose rows are destinations j and
// whose columns are predecessors i. Row j may use columns
// [col_lo : col_hi], further capped at j-1 when `staircase` is set. Cells
// outside that range are treated as +inf, ordered by column among
// themselves, which keeps the padded matrix totally monotone.
struct MatrixShape {
  Index row_lo = 0;
  Index row_hi = 0;
  Index col_lo = 0;
  Index col_hi = 0;
  bool staircase = false;

  Index rows() const { return row_hi - row_lo + 1; }
  Index last_col(Index row) const { return staircase ? std::min(col_hi, row - 1) : col_hi; }
  bool feasible(Index row, Index col) const { return col >= col_lo && col <= last_col(row); }
};

template <class T>
struct RowMinimum {
  Index row;
  Index col;
  T value;
};

namespace detail {

template <class Eval>
class Smawk {
 public:
  using Value = decltype(std::declval<Eval&>()(Index{}, Index{}));

  Smawk(const MatrixShape& shape, Eval& eval, TieRule tie, std::span<Index> argmin,
        IndexArena& arena)
      : shape_(shape), eval_(eval), tie_(tie), argmin_(argmin), arena_(arena) {}

  // Column sequence of one recursion level: either a contiguous range or a
  // list held in the arena.
  struct Cols {
    const Index* list = nullptr;
    Index first = 0;
    Index count = 0;
    Index operator[](Index k) const { return list ? list[k] : first + k; }
  };

  template <class Sink>
  void solve(Index first_row, Index stride, Index count, Cols cols, Sink& sink) {
    if (count == 0) return;

    // Reduce: keep at most `count` candidate columns. A column is dropped
    // when a later column beats it on the row it would be responsible for.
    const Index cap = std::min(count, cols.count);
    std::span<Index> kept = arena_.take(static_cast<std::size_t>(cap));
    Index size = 0;
    for (Index k = 0; k < cols.count; ++k) {
      const Index c = cols[k];
      while (size > 0 && better(first_row + (size - 1) * stride, c, kept[size - 1])) --size;
      if (size < count) kept[size++] = c;
    }

    solve(first_row + stride, stride * 2, count / 2, Cols{kept.data(), 0, size}, sink);

    // Interpolate the even positions between the minimizers of their odd
    // neighbours.
    Index p = 0;
    for (Index k = 0; k < count; k += 2) {
      const Index row = first_row + k * stride;
      const Index stop = (k + 1 < count) ? argmin_[row + stride - shape_.row_lo] : kept[size - 1];
      Index best = kept[p];
      bool best_feasible = shape_.feasible(row, best);
      Value best_value{};
      if (best_feasible) best_value = eval_(row, best);
      while (kept[p] != stop) {
        ++p;
        const Index c = kept[p];
        if (!shape_.feasible(row, c)) continue;
        const Value v = eval_(row, c);
        if (!best_feasible || v < best_value || (v == best_value && tie_ == TieRule::Rightmost)) {
          best = c;
          best_value = v;
          best_feasible = true;
        }
      }
      ensure(best_feasible, "smawk: row without feasible column");
      argmin_[row - shape_.row_lo] = best;
      sink(row, best, best_value);
    }
  }

 private:
  // True when column a ranks strictly before column b on `row` (a > b here).
  bool better(Index row, Index a, Index b) {
    const bool fa = shape_.feasible(row, a);
    const bool fb = shape_.feasible(row, b);
    if (fa != fb) return fa;
    if (!fa) return a < b;
    const Value va = eval_(row, a);
    const Value vb = eval_(row, b);
    if (va != vb) return va < vb;
    return tie_ == TieRule::Leftmost ? a < b : a > b;
  }

  const MatrixShape& shape_;
  Eval& eval_;
  TieRule tie_;
  std::span<Index> argmin_;
  IndexArena& arena_;
};

inline void check_shape(const MatrixShape& shape) {
  require(shape.row_lo <= shape.row_hi, "row_minima: empty row range");
  require(shape.col_lo <= shape.last_col(shape.row_lo), "row_minima: row without feasible column");
}

}  // namespace detail

// Row minima of a totally monotone matrix. `eval(row, col)` is only called on
// feasible cells. `sink(row, col, value)` fires exactly once per row.
// `argmin` must hold rows() cells and receives the minimizing columns;
// scratch comes from `arena` (at most 2*rows() cells, released on return).
template <class Eval, class Sink>
void row_minima(const MatrixShape& shape, Eval&& eval, TieRule tie, Sink&& sink,
                std::span<Index> argmin, IndexArena& arena) {
  detail::check_shape(shape);
  require(static_cast<Index>(argmin.size()) >= shape.rows(), "row_minima: argmin span too small");
  auto scope = arena.scope();
  detail::Smawk<std::remove_reference_t<Eval>> engine(shape, eval, tie, argmin, arena);
  typename detail::Smawk<std::remove_reference_t<Eval>>::Cols cols{
      nullptr, shape.col_lo, shape.last_col(shape.row_hi) - shape.col_lo + 1};
  engine.solve(shape.row_lo, 1, shape.rows(), cols, sink);
}

// Same as above but takes the argmin storage from the arena too.
template <class Eval, class Sink>
void row_minima(const MatrixShape& shape, Eval&& eval, TieRule tie, Sink&& sink, IndexArena& arena) {
  detail::check_shape(shape);
  auto scope = arena.scope();
  std::span<Index> argmin = arena.take(static_cast<std::size_t>(shape.rows()));
  row_minima(shape, std::forward<Eval>(eval), tie, std::forward<Sink>(sink), argmin, arena);
}

// Sink form with private scratch.
template <class Eval, class Sink>
void row_minima(const MatrixShape& shape, Eval&& eval, TieRule tie, Sink&& sink) {
  detail::check_shape(shape);
  IndexArena arena(static_cast<std::size_t>(3 * shape.rows()));
  row_minima(shape, std::forward<Eval>(eval), tie, std::forward<Sink>(sink), arena);
}

// Convenience form that allocates its own scratch.
template <class Eval>
auto row_minima(const MatrixShape& shape, Eval&& eval, TieRule tie) {
  using Value = decltype(eval(Index{}, Index{}));
  detail::check_shape(shape);
  IndexArena arena(static_cast<std::size_t>(3 * shape.rows()));
  std::vector<RowMinimum<Value>> by_row(static_cast<std::size_t>(shape.rows()));
  row_minima(
      shape, eval, tie,
      [&](Index row, Index col, Value v) {
        by_row[static_cast<std::size_t>(row - shape.row_lo)] = RowMinimum<Value>{row, col, v};
      },
      arena);
  return by_row;
}

}  // namespace mlink
