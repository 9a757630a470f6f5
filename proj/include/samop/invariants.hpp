#pragma once

#include <utility>

#include "samop/expr.hpp"
#include "samop/graph.hpp"
#include "samop/signature.hpp"

namespace samop {

// λ = 0 invariants. Graph-expressible expressions go through the chain
// census; translated shift atoms (and their direct sums, amplifications and
// powers) are evaluated from the analytic atom tables at λ = 0.

// Census-level evaluation used everywhere the graph exists.
SigData sig_from_graph(const BasisGraph& g);
GrowthSeq alpha_growth(const ChainCensus& c);
GrowthSeq beta_growth(const ChainCensus& c);

SigData eval_at_zero(const ExprPtr& e);

std::pair<GrowthSeq, GrowthSeq> kernel_growth(const ExprPtr& e);
FredholmSignature signature(const ExprPtr& e);
// (smul, bsmul)
std::pair<ExtNat, ExtNat> samuel_multiplicities(const ExprPtr& e);
FredholmClass classify(const ExprPtr& e);

// Theorem-1.5-style normal form of a semi-Fredholm operator: T₁ right
// invertible (backward rays + bi-infinite slack + invertible loops), T₂ left
// invertible (forward rays), T₃ finite nilpotent (all finite chains).
struct NormalForm3 {
  ChainCensus t1, t2, t3;
  ExtNat ind_t1;      // = b.s_mul(T) = α(T₁)
  ExtNat neg_ind_t2;  // = s_mul(T) = β(T₂)
  long long h3_dim = 0;
};
NormalForm3 normal_form(const ExprPtr& e);

// Proposition-1.7 decomposition of an upper semi-Browder operator:
// H₁ = N(T^p) spans the finite chains, the rest is left invertible.
struct UpperBrowderDecomp {
  long long h1_dim = 0;
  ChainCensus nilpotent_part;   // the finite chains
  ChainCensus left_inv_part;    // forward rays + bi-infinite (loops omitted)
  ExtNat beta_t2;               // = s_mul(T)
};
UpperBrowderDecomp decompose_upper_browder(const ExprPtr& e);

// Proposition-1.8 dual.
struct LowerBrowderDecomp {
  long long h2_dim = 0;
  ChainCensus right_inv_part;  // backward rays + bi-infinite
  ChainCensus nilpotent_part;
  ExtNat alpha_t1;             // = b.s_mul(T)
};
LowerBrowderDecomp decompose_lower_browder(const ExprPtr& e);

}  // namespace samop
