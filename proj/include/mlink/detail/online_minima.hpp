#pragma once

#include <array>
#include <span>

#include "mlink/arena.hpp"
#include "mlink/smawk.hpp"
#include "mlink/types.hpp"

namespace mlink::detail {

// Online row minima of an n x n lower-triangular totally monotone matrix
// (LARSCH-style online searching). Row i may use columns [0:i], and the entries of
// row i may depend on the answers for rows < i; rows are answered strictly
// in order through next(). Linear evaluations and at most n arena cells.
//
// The structure alternates two reductions: a row level answers even rows by
// scanning between the answers of its odd neighbours (delegated to the next
// level), and a column level prunes the columns offered to those odd rows
// down to one per row with a SMAWK-style stack.
template <class Eval>
class OnlineRowMinima {
 public:
  using Value = decltype(std::declval<Eval&>()(Index{}, Index{}));

  OnlineRowMinima(Index n, Eval& eval, TieRule tie, IndexArena& arena) : eval_(eval), tie_(tie) {
    require(n >= 1, "OnlineRowMinima: need at least one row");
    rows_[0].n = n;
    depth_ = 0;
    while (rows_[depth_].n / 2 > 0) {
      const Index half = rows_[depth_].n / 2;
      ++depth_;
      ensure(depth_ < kMaxDepth, "OnlineRowMinima: too many levels");
      cols_[depth_].n = half;
      cols_[depth_].cols = arena.take(static_cast<std::size_t>(half)).data();
      rows_[depth_].n = half;
    }
  }

  struct Answer {
    Index col;
    Value value;
  };

  Answer next() {
    const Index row = rows_[0].cur;
    const Index col = row_argmin(0);
    return {col, row == answer_row_ && col == answer_col_ ? answer_value_ : eval_(row, col)};
  }

 private:
  static constexpr int kMaxDepth = 64;

  struct RowLevel {
    Index n = 0;
    Index cur = 0;
    Index state = 0;
  };
  struct ColLevel {
    Index n = 0;
    Index cur = 0;
    Index size = 0;
    Index* cols = nullptr;
  };

  bool prefer_new(const Value& old_v, const Value& new_v) const {
    return tie_ == TieRule::Leftmost ? new_v < old_v : new_v <= old_v;
  }

  // Entry (i, j) of the matrix seen by row level d.
  Value row_value(int d, Index i, Index j) const {
    while (d > 0) {
      j = cols_[d].cols[j];
      i = 2 * i + 1;
      --d;
    }
    return eval_(i, j);
  }

  // Entry (i, j) of the matrix seen by column level d: the odd rows of the
  // row level above it.
  Value col_value(int d, Index i, Index j) const { return row_value(d - 1, 2 * i + 1, j); }

  void remember(int d, Index row, Index col, const Value& v) {
    if (d != 0) return;
    answer_row_ = row;
    answer_col_ = col;
    answer_value_ = v;
  }

  Index row_argmin(int d) {
    RowLevel& level = rows_[d];
    const Index cur = level.cur++;
    if (cur % 2 == 0) {
      const Index prev = level.state;
      const Index next = (cur + 1 == level.n) ? level.n - 1 : col_argmin(d + 1);
      level.state = next;
      Index best = prev;
      Value best_v = row_value(d, cur, prev);
      for (Index j = prev + 1; j <= next; ++j) {
        const Value v = row_value(d, cur, j);
        if (prefer_new(best_v, v)) {
          best = j;
          best_v = v;
        }
      }
      remember(d, cur, best, best_v);
      return best;
    }
    const Value kept = row_value(d, cur, level.state);
    const Value fresh = row_value(d, cur, cur);
    if (prefer_new(kept, fresh)) {
      remember(d, cur, cur, fresh);
      return cur;
    }
    remember(d, cur, level.state, kept);
    return level.state;
  }

  Index col_argmin(int d) {
    ColLevel& level = cols_[d];
    const Index cur = level.cur++;
    const Index first = cur == 0 ? 0 : 2 * cur - 1;
    for (Index j = first; j <= 2 * cur; ++j) {
      while (level.size != cur &&
             prefer_new(col_value(d, level.size - 1, level.cols[level.size - 1]),
                        col_value(d, level.size - 1, j))) {
        --level.size;
      }
      if (level.size != level.n) level.cols[level.size++] = j;
    }
    return level.cols[row_argmin(d)];
  }

  Eval& eval_;
  TieRule tie_;
  int depth_ = 0;
  std::array<RowLevel, kMaxDepth> rows_{};
  std::array<ColLevel, kMaxDepth> cols_{};
  Index answer_row_ = -1;
  Index answer_col_ = -1;
  Value answer_value_{};
};

}  // namespace mlink::detail
