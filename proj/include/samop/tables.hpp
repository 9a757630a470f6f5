#pragma once

#include "samop/matrix.hpp"
#include "samop/signature.hpp"

namespace samop {

// Analytic signature rows for the atoms. Each row carries the full growth
// sequences so compositions stay exact.
//
//   U − λ:  |λ| < 1   left invertible, β = 1, des = ∞, s_mul = 1
//           |λ| = 1   injective, range not closed (so β = ∞), s_mul = ∞
//           |λ| > 1   invertible
//
// scaled and translated to circle(μ, |c|²) for μI + c·U. The backward shift
// mirrors the interior row; on the circle α(U*−λ) is still 0 (the formal
// eigenvectors have constant modulus, hence are not ℓ²), so the boundary row
// is the same for both shifts and for the bilateral shift.

inline SigData row_forward_rays(ExtNat count) {
  SigData d;
  d.alpha_seq = GrowthSeq::constant(ExtNat(0));
  d.beta_seq = GrowthSeq::linear(count);
  d.sig.alpha = ExtNat(0);
  d.sig.beta = count;
  d.sig.range_closed = true;
  d.sig.asc = ExtNat(0);
  d.sig.des = count.is_zero() ? ExtNat(0) : ext_inf();
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = ExtNat(0);
  return d;
}

inline SigData row_backward_rays(ExtNat count) {
  SigData d;
  d.alpha_seq = GrowthSeq::linear(count);
  d.beta_seq = GrowthSeq::constant(ExtNat(0));
  d.sig.alpha = count;
  d.sig.beta = ExtNat(0);
  d.sig.range_closed = true;
  d.sig.asc = count.is_zero() ? ExtNat(0) : ext_inf();
  d.sig.des = ExtNat(0);
  d.sig.smul = ExtNat(0);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

// Shift-type atom on its boundary circle: injective, dense non-closed range.
inline SigData row_boundary_not_closed() {
  SigData d;
  d.alpha_seq = GrowthSeq::constant(ExtNat(0));
  d.beta_seq = GrowthSeq::constant(ext_inf());
  d.sig.alpha = ExtNat(0);
  d.sig.beta = ext_inf();
  d.sig.range_closed = false;
  d.sig.asc = ExtNat(0);
  d.sig.des = ext_inf();
  d.sig.smul = ext_inf();
  d.sig.bsmul = ExtNat(0);
  return d;
}

// `count` nilpotent cells of length `len` at their eigenvalue.
inline SigData row_finite_chains(long long len, ExtNat count) {
  SigData d;
  std::vector<ExtNat> prefix;
  for (long long k = 1; k < len; ++k)
    prefix.push_back(count * ExtNat(static_cast<std::uint64_t>(k)));
  ExtNat total = count * ExtNat(static_cast<std::uint64_t>(len));
  d.alpha_seq = GrowthSeq(prefix, ExtNat(0), total).normalized();
  d.beta_seq = d.alpha_seq;
  d.sig.alpha = count;
  d.sig.beta = count;
  d.sig.range_closed = true;
  d.sig.asc = count.is_zero() ? ExtNat(0) : ExtNat(static_cast<std::uint64_t>(len));
  d.sig.des = d.sig.asc;
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

// Diagonal value of multiplicity `mult` at its own point.
inline SigData row_eigen_point(ExtNat mult) {
  SigData d;
  d.alpha_seq = GrowthSeq::constant(mult);
  d.beta_seq = d.alpha_seq;
  d.sig.alpha = mult;
  d.sig.beta = mult;
  d.sig.range_closed = true;
  d.sig.asc = mult.is_zero() ? ExtNat(0) : ExtNat(1);
  d.sig.des = d.sig.asc;
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

// Exact Jordan-structure signature of a finite upper-triangular matrix at λ,
// from the rank chain of (M − λ)ᵏ.
inline SigData trimatrix_point_row(const DenseMat& m, const GaussianRational& lambda) {
  const long n = m.rows();
  DenseMat shifted = m;
  for (long i = 0; i < n; ++i) shifted(i, i) -= lambda;
  std::vector<ExtNat> prefix;
  DenseMat p = DenseMat::Identity(n, n);
  long prev = 0;
  long stab = 0;
  for (long k = 1; k <= n; ++k) {
    p = p * shifted;
    long ak = n - exact_rank(p);
    prefix.push_back(ExtNat(static_cast<std::uint64_t>(ak)));
    if (ak == prev) {
      stab = k - 1;
      break;
    }
    prev = ak;
    stab = k;
  }
  ExtNat final_alpha = prefix.empty() ? ExtNat(0) : prefix.back();
  SigData d;
  d.alpha_seq = GrowthSeq(prefix, ExtNat(0), final_alpha).normalized();
  d.beta_seq = d.alpha_seq;  // square finite matrix: coker and kernel dims agree
  d.sig.alpha = d.alpha_seq.eval(1);
  d.sig.beta = d.sig.alpha;
  d.sig.range_closed = true;
  d.sig.asc = final_alpha.is_zero() ? ExtNat(0) : ExtNat(static_cast<std::uint64_t>(stab));
  d.sig.des = d.sig.asc;
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

}  // namespace samop
