#pragma once

#include <string>

#include "samop/extnat.hpp"
#include "samop/growth.hpp"

namespace samop {

// The full record of one operator at one spectral parameter:
// α = dim N(T), β = dim K/R(T), range closedness, ascent, descent and the two
// Samuel multiplicities (stabilized cokernel/kernel growth rates).
struct FredholmSignature {
  ExtNat alpha, beta;
  bool range_closed = true;
  ExtNat asc, des;
  ExtNat smul, bsmul;

  bool operator==(const FredholmSignature&) const = default;
  std::string str() const;
};

// Membership lattice for the operator classes of the paper.
struct FredholmClass {
  bool invertible = false;
  bool left_invertible = false;
  bool right_invertible = false;
  bool fredholm = false;            // Φ
  bool upper_semi_fredholm = false;  // Φ₊
  bool lower_semi_fredholm = false;  // Φ₋
  bool semi_fredholm = false;
  bool browder = false;             // Φ_b
  bool upper_semi_browder = false;  // Φ_ab
  bool lower_semi_browder = false;  // Φ_sb
  bool shift_like = false;           // semi-Fredholm with b.s_mul = 0
  bool backward_shift_like = false;  // semi-Fredholm with s_mul = 0
  bool stationary = false;           // both multiplicities 0

  bool operator==(const FredholmClass&) const = default;
};

inline FredholmClass classify_signature(const FredholmSignature& s) {
  FredholmClass c;
  c.left_invertible = s.alpha.is_zero() && s.range_closed;
  c.right_invertible = s.beta.is_zero() && s.range_closed;
  c.invertible = c.left_invertible && c.right_invertible;
  c.upper_semi_fredholm = !s.alpha.is_inf() && s.range_closed;
  c.lower_semi_fredholm = !s.beta.is_inf() && s.range_closed;
  c.semi_fredholm = c.upper_semi_fredholm || c.lower_semi_fredholm;
  c.fredholm = c.upper_semi_fredholm && c.lower_semi_fredholm;
  c.upper_semi_browder = c.upper_semi_fredholm && !s.asc.is_inf();
  c.lower_semi_browder = c.lower_semi_fredholm && !s.des.is_inf();
  c.browder = c.fredholm && !s.asc.is_inf() && !s.des.is_inf();
  c.shift_like = c.semi_fredholm && s.bsmul.is_zero();
  c.backward_shift_like = c.semi_fredholm && s.smul.is_zero();
  c.stationary = c.semi_fredholm && s.smul.is_zero() && s.bsmul.is_zero();
  return c;
}

// Signature plus the two growth sequences it is derived from. Keeping the
// sequences allows exact composition: α, β and the multiplicities add over
// direct sums, ascent/descent take the max, amplification maps pointwise.
struct SigData {
  FredholmSignature sig;
  GrowthSeq alpha_seq, beta_seq;
};

inline SigData sig_invertible() {
  SigData d;
  d.sig = {ExtNat(0), ExtNat(0), true, ExtNat(0), ExtNat(0), ExtNat(0), ExtNat(0)};
  d.alpha_seq = GrowthSeq::constant(ExtNat(0));
  d.beta_seq = GrowthSeq::constant(ExtNat(0));
  return d;
}

inline SigData sig_add(const SigData& a, const SigData& b) {
  SigData d;
  d.alpha_seq = growth_add(a.alpha_seq, b.alpha_seq);
  d.beta_seq = growth_add(a.beta_seq, b.beta_seq);
  d.sig.alpha = a.sig.alpha + b.sig.alpha;
  d.sig.beta = a.sig.beta + b.sig.beta;
  d.sig.range_closed = a.sig.range_closed && b.sig.range_closed;
  d.sig.asc = max(a.sig.asc, b.sig.asc);
  d.sig.des = max(a.sig.des, b.sig.des);
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

inline SigData sig_amplify(const SigData& a) {
  SigData d;
  d.alpha_seq = growth_amplify(a.alpha_seq);
  d.beta_seq = growth_amplify(a.beta_seq);
  d.sig.alpha = a.sig.alpha.amplified();
  d.sig.beta = a.sig.beta.amplified();
  d.sig.range_closed = a.sig.range_closed;  // uniform lower bound: same block repeated
  d.sig.asc = a.sig.asc;
  d.sig.des = a.sig.des;
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

}  // namespace samop
