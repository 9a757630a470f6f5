#pragma once

#include <string>
#include <vector>

#include "samop/expr.hpp"
#include "samop/matrix.hpp"

namespace samop {

// Independent desk-scale verification: compress the operator to the first n
// basis vectors of every ray/chain (a cut ray behaves as a nilpotent chain of
// length n), then compare exact rank-derived kernel dimensions of the matrix
// powers against the cut-chain combinatorics.
//
// The matrix side is built structurally from the AST; the predicted side runs
// the lowering machinery in truncated mode. The two paths meet only at the
// AST (and, for TriMatrix atoms, at the exact elimination routine).
struct TruncationReport {
  int n = 0;
  int k_max = 0;
  long long dim = 0;
  std::vector<long long> predicted;  // dim N(Mᵏ) for k = 1..k_max
  std::vector<long long> computed;
  bool match = false;

  std::string str() const;
};

// The compressed operator. Amplifications and infinite multiplicities
// materialize n copies; finite chains are kept whole when shorter than n,
// TriMatrix blocks are always kept whole.
SpMat truncate(const ExprPtr& e, int n);

TruncationReport truncated_growth_check(const ExprPtr& e, int n, int k_max);

// Dimension of truncate(e, n) without materializing it (generator sizing).
long long truncated_dim(const ExprPtr& e, int n);

}  // namespace samop
