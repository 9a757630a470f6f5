#pragma once

#include <optional>
#include <string>
#include <utility>

#include "samop/expr.hpp"
#include "samop/graph.hpp"
#include "samop/signature.hpp"

namespace samop {

// Which class some corner C should place M_C = (A C; 0 B) into.
enum class CompletionKind { LeftInvertible, UpperBrowder, LowerBrowder, Browder };

const char* completion_token(CompletionKind k);
std::optional<CompletionKind> completion_from_token(const std::string& token);

struct CompletionVerdict {
  bool possible = false;
  std::string rule;    // the clause that decided it
  std::string detail;  // the arithmetic behind the clause
  std::optional<WitnessMap> witness;
  ExprPtr assembled;  // M_C when possible

  std::string str() const;
};

// Exact decision at λ = 0 by the closed-form criteria:
//   left invertible: A left invertible and α(B) ≤ β(A) (R(B) closed here),
//   Φ_ab: A ∈ Φ_ab and (B ∈ Φ₊ ? b.s_mul(B) ≤ s_mul(A) : s_mul(A) = ∞),
//   Φ_sb: B ∈ Φ_sb and (A ∈ Φ₋ ? b.s_mul(B) ≥ s_mul(A) : b.s_mul(B) = ∞),
//   Φ_b:  A ∈ Φ_ab, B ∈ Φ_sb and b.s_mul(B) = s_mul(A).
// Positive verdicts carry a constructed witness whose assembled operator is
// re-classified through the chain census, never through the predicate.
CompletionVerdict decide_complete(CompletionKind kind, const ExprPtr& a, const ExprPtr& b);

// The witness construction alone; throws Infeasible when the verdict is
// negative.
std::pair<WitnessMap, ExprPtr> construct_witness(CompletionKind kind, const ExprPtr& a,
                                                 const ExprPtr& b);

}  // namespace samop
