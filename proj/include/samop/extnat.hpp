#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "samop/errors.hpp"

namespace samop {

// Extended natural number: {0, 1, 2, ...} ∪ {∞}. The value domain for kernel
// and cokernel dimensions, ascent/descent and Samuel multiplicities.
//
// Arithmetic follows cardinal conventions: a + ∞ = ∞, a·∞ = ∞ for a ≠ 0 and
// 0·∞ = 0. Subtraction is partial (minuend ≥ subtrahend, not both ∞).
class ExtNat {
 public:
  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(std::uint64_t v) : v_(v) {
    if (v == kInf) v_ = kInf;  // callers never pass the sentinel directly
  }

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.v_ = kInf;
    return e;
  }

  bool is_inf() const { return v_ == kInf; }
  bool is_zero() const { return v_ == 0; }

  // Finite value accessor; caller must check is_inf() first.
  std::uint64_t finite() const {
    if (is_inf()) fail(ErrorKind::Internal, "finite() on ∞");
    return v_;
  }

  friend ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    std::uint64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r) || r == kInf)
      fail(ErrorKind::Internal, "ExtNat overflow in +");
    return ExtNat(r);
  }

  friend ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.is_zero() || b.is_zero()) return ExtNat(0);  // 0·∞ = 0
    if (a.is_inf() || b.is_inf()) return infinity();
    std::uint64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r) || r == kInf)
      fail(ErrorKind::Internal, "ExtNat overflow in *");
    return ExtNat(r);
  }

  ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

  // Partial subtraction: defined only when *this >= o and not both infinite.
  std::optional<ExtNat> checked_sub(ExtNat o) const {
    if (is_inf() && o.is_inf()) return std::nullopt;
    if (*this < o) return std::nullopt;
    if (is_inf()) return infinity();
    return ExtNat(v_ - o.v_);
  }

  // Total order with ∞ as the maximum.
  friend std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    return a.v_ <=> b.v_;  // sentinel is the largest uint64 value
  }
  friend bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }

  friend ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
  friend ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

  // Countable amplification: 0 stays 0, anything else becomes ∞.
  ExtNat amplified() const { return is_zero() ? ExtNat(0) : infinity(); }

  std::string str() const { return is_inf() ? "∞" : std::to_string(v_); }

  friend std::ostream& operator<<(std::ostream& os, ExtNat e) { return os << e.str(); }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

inline ExtNat ext_inf() { return ExtNat::infinity(); }

}  // namespace samop
