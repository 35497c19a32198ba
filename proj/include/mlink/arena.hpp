#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "mlink/types.hpp"

namespace mlink {

// Fixed-capacity stack allocator for index scratch. Every piece of scratch the
// solver needs (SMAWK column lists, parent selections, online-search stacks,
// backtracked paths) comes from here, so the high-water mark is an honest
// audit of auxiliary space.
class IndexArena {
 public:
  IndexArena() = default;
  explicit IndexArena(std::size_t capacity) : cells_(capacity) {}

  // Restores the arena top when it goes out of scope.
  class Scope {
   public:
    explicit Scope(IndexArena& arena) : arena_(arena), saved_(arena.top_) {}
    ~Scope() { arena_.top_ = saved_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    IndexArena& arena_;
    std::size_t saved_;
  };

  Scope scope() { return Scope(*this); }

  std::span<Index> take(std::size_t n) {
    ensure(top_ + n <= cells_.size(), "index arena exhausted");
    std::span<Index> out(cells_.data() + top_, n);
    top_ += n;
    high_water_ = std::max(high_water_, top_);
    return out;
  }

  std::size_t capacity() const { return cells_.size(); }
  std::size_t in_use() const { return top_; }
  std::size_t high_water() const { return high_water_; }
  void reset_high_water() { high_water_ = top_; }

 private:
  std::vector<Index> cells_;
  std::size_t top_ = 0;
  std::size_t high_water_ = 0;
};

}  // namespace mlink
