#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samop/expr.hpp"
#include "samop/region.hpp"
#include "samop/signature.hpp"

namespace samop {

// The nine spectra of the introduction: λ belongs to σ_kind(T) when T − λI
// falls outside the corresponding class.
enum class SpectrumKind {
  Sigma,         // invertible
  Left,          // left invertible
  Right,         // right invertible
  Essential,     // Fredholm
  SFPlus,        // upper semi-Fredholm
  SFMinus,       // lower semi-Fredholm
  Browder,       // Φ_b
  UpperBrowder,  // Φ_ab
  LowerBrowder,  // Φ_sb
};

const char* kind_token(SpectrumKind k);
std::optional<SpectrumKind> kind_from_token(const std::string& token);

// Does the class test of `kind` fail on this signature (λ in the spectrum)?
bool kind_fails(SpectrumKind kind, const FredholmSignature& sig);

// Exact signature of e − λ. Translated atoms use the analytic tables; powers
// of translated atoms are supported at λ = 0 only; tri-blocks with a nonzero
// witness are supported at λ = 0 only (through the chain census).
SigData signature_at(const ExprPtr& e, const GaussianRational& lambda);

// λ ↦ signature as a first-match list of (cell, signature) parts covering ℂ:
// special points first, then the circles and annuli of the (single) shift
// family. Defined when all shift-type atoms share one center; otherwise the
// exact cell partition leaves the representable family.
struct PiecewisePart {
  RegionCell cell;
  SigData data;
};

struct PiecewiseSignature {
  std::vector<PiecewisePart> parts;
  const SigData& at(const GaussianRational& lambda) const;
};

PiecewiseSignature piecewise_signature(const ExprPtr& e);

Region spectrum(const ExprPtr& e, SpectrumKind kind);

// Completion spectra ∩_C σ_kind(M_C) by the closed-form right-hand sides:
//   sigma: σ_l(A) ∪ σ_r(B) ∪ {α(B−λ) ≠ β(A−λ)}
//   ab:    σ_ab(A) ∪ {λ ∈ σ_SF+(B), s_mul(A−λ) < ∞}
//                  ∪ {λ ∈ Φ(A)∩Φ₊(B): b.s_mul(B−λ) > s_mul(A−λ)}
//   sb:    σ_sb(B) ∪ {λ ∈ σ_SF−(A), b.s_mul(B−λ) < ∞}
//                  ∪ {λ ∈ Φ(B)∩Φ₋(A): b.s_mul(B−λ) < s_mul(A−λ)}
//   b:     σ_ab(A) ∪ σ_sb(B) ∪ {λ ∈ Φ_ab(A)∩Φ_sb(B): b.s_mul(B−λ) ≠ s_mul(A−λ)}
enum class MeetKind { Sigma, UpperBrowder, LowerBrowder, Browder };

const char* meet_token(MeetKind k);
std::optional<MeetKind> meet_from_token(const std::string& token);

// Pointwise evaluation of the formula (total whenever signature_at is).
bool completion_member(MeetKind kind, const ExprPtr& a, const ExprPtr& b,
                       const GaussianRational& lambda);
// The equivalent Browder form via α(A−λ)+α(B−λ) ≠ β(A−λ)+β(B−λ).
bool completion_member_dimension_form(const ExprPtr& a, const ExprPtr& b,
                                      const GaussianRational& lambda);

Region completion_spectrum(MeetKind kind, const ExprPtr& a, const ExprPtr& b);

}  // namespace samop
