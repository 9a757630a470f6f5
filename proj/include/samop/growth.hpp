#pragma once

#include <algorithm>
#include <vector>

#include "samop/extnat.hpp"

namespace samop {

// Eventually affine, monotone nondecreasing sequence k ↦ s(k) of extended
// naturals, k ≥ 1. Models k ↦ α(Tᵏ) and k ↦ β(Tᵏ): a prefix of explicit
// values for k = 1..k₀ followed by the tail slope·k + intercept, where any ∞
// term makes the value ∞.
struct GrowthSeq {
  std::vector<ExtNat> prefix;  // values at k = 1..prefix.size()
  ExtNat slope;
  ExtNat intercept;

  GrowthSeq() : slope(0), intercept(0) {}
  GrowthSeq(std::vector<ExtNat> p, ExtNat s, ExtNat c)
      : prefix(std::move(p)), slope(s), intercept(c) {}

  static GrowthSeq constant(ExtNat v) { return GrowthSeq({}, ExtNat(0), v); }
  static GrowthSeq linear(ExtNat s) { return GrowthSeq({}, s, ExtNat(0)); }

  ExtNat eval(std::uint64_t k) const {
    if (k == 0) return ExtNat(0);  // T⁰ = I
    if (k <= prefix.size()) return prefix[k - 1];
    return slope * ExtNat(k) + intercept;
  }

  bool tail_infinite() const { return slope.is_inf() || intercept.is_inf(); }

  // Sequence is valid when nondecreasing across the prefix and into the tail.
  bool monotone() const {
    std::uint64_t upto = prefix.size() + 2;
    for (std::uint64_t k = 1; k < upto; ++k)
      if (eval(k) > eval(k + 1)) return false;
    return true;
  }

  // Drop prefix entries that already agree with the affine tail.
  GrowthSeq normalized() const {
    GrowthSeq out = *this;
    while (!out.prefix.empty()) {
      std::uint64_t k = out.prefix.size();
      ExtNat tail_val = out.slope * ExtNat(k) + out.intercept;
      if (out.prefix.back() == tail_val)
        out.prefix.pop_back();
      else
        break;
    }
    return out;
  }

  friend bool operator==(const GrowthSeq& a, const GrowthSeq& b) {
    GrowthSeq x = a.normalized(), y = b.normalized();
    return x.prefix == y.prefix && x.slope == y.slope && x.intercept == y.intercept;
  }
};

// lim s(k)/k: ∞ when any tail value is ∞, otherwise the affine slope.
inline ExtNat growth_slope(const GrowthSeq& s) {
  if (s.tail_infinite()) return ext_inf();
  return s.slope;
}

// Pointwise ExtNat sum, prefixes aligned to the longer k₀.
inline GrowthSeq growth_add(const GrowthSeq& a, const GrowthSeq& b) {
  GrowthSeq out;
  std::size_t k0 = std::max(a.prefix.size(), b.prefix.size());
  out.prefix.reserve(k0);
  for (std::size_t k = 1; k <= k0; ++k)
    out.prefix.push_back(a.eval(k) + b.eval(k));
  out.slope = a.slope + b.slope;
  out.intercept = a.intercept + b.intercept;
  return out.normalized();
}

// Pointwise multiplication by ∞ (countable direct sum of one operator):
// 0 stays 0, nonzero becomes ∞.
inline GrowthSeq growth_amplify(const GrowthSeq& s) {
  GrowthSeq out;
  out.prefix.reserve(s.prefix.size());
  for (const ExtNat& v : s.prefix) out.prefix.push_back(v.amplified());
  if (!s.slope.is_zero()) {
    // Growing tail: every tail value is nonzero, and the growth itself is
    // unbounded, so both tail parameters go to ∞.
    out.slope = ext_inf();
    out.intercept = ext_inf();
  } else {
    out.slope = ExtNat(0);
    out.intercept = s.intercept.amplified();
  }
  return out.normalized();
}

// Smallest k with s(k) = s(k+1) = ... (the paper's ascent/descent shape for a
// single chain component). ∞ when the tail keeps growing. Only meaningful for
// sequences of one component, where equal dimensions imply equal subspaces;
// direct sums take the max of component indices instead.
inline ExtNat stabilization_index(const GrowthSeq& s) {
  if (!s.slope.is_zero()) return ext_inf();
  ExtNat final_value = s.intercept;
  std::uint64_t k = s.prefix.size();
  while (k > 0 && s.prefix[k - 1] == final_value) --k;
  // s(k+1) onward equals final_value; s(0) = 0 conceptually, so the index is
  // 0 exactly when the whole sequence is 0.
  if (k == 0) return final_value.is_zero() ? ExtNat(0) : ExtNat(1);
  return ExtNat(k + 1);
}

}  // namespace samop
