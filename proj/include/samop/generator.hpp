#pragma once

#include <cstdint>
#include <random>

#include "samop/expr.hpp"
#include "samop/graph.hpp"

namespace samop {

// Deterministic seeded randomness for the verification suites. Draws go
// through bounded modular reduction only, so a seed fully determines every
// generated expression on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
  bool chance(unsigned percent) { return next(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

struct GenOptions {
  int max_depth = 4;
  bool allow_translated = false;  // μ ≠ 0 shift atoms (not graph-expressible)
  bool allow_trimatrix = true;
  bool allow_bilateral = true;
  unsigned amplify_pct = 15;  // capped: nested amplifications collapse anyway
  unsigned power_pct = 12;
  unsigned sum_pct = 38;
};

GaussianRational gen_weight(Rng& rng);
ExprPtr gen_expr(Rng& rng, const GenOptions& opt);

// Redraws until the expression is semi-Fredholm (still deterministic).
ExprPtr gen_semi_fredholm(Rng& rng, const GenOptions& opt);

// Random basis-aligned witness for tri(A, C, B): explicit finite pairs or,
// occasionally, the ray pairing.
WitnessMap gen_witness(Rng& rng, const BasisGraph& a_graph, const BasisGraph& b_graph);

}  // namespace samop
