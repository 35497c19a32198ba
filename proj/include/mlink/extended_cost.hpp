#pragma once

#include <compare>
#include <ostream>

namespace mlink {

// A cost extended with -inf / +inf sentinels. The sentinels only take part
// in comparisons; there is deliberately no arithmetic on this type.
template <class T>
class ExtendedCost {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr ExtendedCost(T value) : kind_(Kind::Finite), value_(value) {}  // NOLINT

  static constexpr ExtendedCost neg_inf() { return ExtendedCost(Kind::NegInf); }
  static constexpr ExtendedCost pos_inf() { return ExtendedCost(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Only meaningful when finite().
  constexpr T value() const { return value_; }

  friend constexpr bool operator==(const ExtendedCost& a, const ExtendedCost& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(const ExtendedCost& a, const ExtendedCost& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.finite()) return std::partial_ordering::equivalent;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedCost& c) {
    if (c.is_neg_inf()) return os << "-inf";
    if (c.is_pos_inf()) return os << "+inf";
    return os << c.value_;
  }

 private:
  constexpr explicit ExtendedCost(Kind k) : kind_(k), value_() {}

  Kind kind_;
  T value_;
};

}  // namespace mlink
