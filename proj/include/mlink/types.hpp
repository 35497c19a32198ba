#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlink {

// Node ids are 1-based throughout; buffers indexed by node have N+1 cells.
using Index = std::int64_t;

// Raised when a caller violates an operation's documented preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal invariant that the theory guarantees does not hold.
// Seeing one means a bug, or an instance that is not actually Monge.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace mlink
