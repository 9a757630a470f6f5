#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "samop/expr.hpp"
#include "samop/extnat.hpp"
#include "samop/scalar.hpp"

namespace samop {

// ---------------------------------------------------------------------------
// Basis graphs: the canonical computational form of a graph-expressible
// operator. Every basis vector maps to a scalar multiple of another basis
// vector (or to 0), so the operator is a disjoint union of weighted chains:
//
//   FiniteChain  v₁→v₂→…→v_n, v_n ↦ 0     (nilpotent Jordan cell)
//   ForwardRay   v₁→v₂→…                   (unilateral shift)
//   BackwardRay  …→v₂→v₁, v₁ ↦ 0           (backward shift)
//   BiInfinite   …→v₋₁→v₀→v₁→…             (bilateral shift)
//   Loop         v ↦ w·v, w ≠ 0            (invertible diagonal summand)
//
// Chains produced by atoms have a constant edge weight; witness merges splice
// finitely many edges between constant tails, which never changes a λ = 0
// invariant. Loops carry no census weight: they are invertible and have no
// witness slots.
// ---------------------------------------------------------------------------

enum class ChainKind { FiniteChain, ForwardRay, BackwardRay, BiInfinite, Loop };

struct ChainGroup {
  ChainKind kind = ChainKind::FiniteChain;
  long long len = 1;  // FiniteChain only: number of vertices (>= 1)
  ExtNat count = ExtNat(1);
  // Eventual edge weight: ForwardRay/BackwardRay use `tail`; BiInfinite uses
  // `tail_left` toward -∞ and `tail` toward +∞; Loop stores its value in
  // `tail`. Finite chains are weight-irrelevant for every invariant.
  GaussianRational tail = GaussianRational(1);
  GaussianRational tail_left = GaussianRational(1);
  // False for chains recovered from a TriMatrix by similarity; those cannot
  // anchor witness edges.
  bool basis_aligned = true;
  // Built by a TriBlock merge: the chain has a finite spliced zone, so its
  // two tails may differ.
  bool witness_merged = false;

  bool has_kernel_slot() const {
    return kind == ChainKind::BackwardRay || kind == ChainKind::FiniteChain;
  }
  bool has_coker_slot() const {
    return kind == ChainKind::ForwardRay || kind == ChainKind::FiniteChain;
  }
};

struct BasisGraph {
  std::vector<ChainGroup> groups;
};

// Multiset of chain types; drives every λ = 0 invariant. Loops are excluded:
// they are invertible summands with no contribution.
struct ChainCensus {
  std::map<long long, ExtNat> finite_chains;  // length -> count
  ExtNat forward_rays = ExtNat(0);
  ExtNat backward_rays = ExtNat(0);
  ExtNat bi_infinite = ExtNat(0);

  ChainCensus& add(const ChainCensus& o);
  ChainCensus amplified() const;
  bool operator==(const ChainCensus& o) const = default;
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Lowering
// ---------------------------------------------------------------------------

// True when the expression lowers to a basis graph: shift-type atoms with
// μ = 0, Jordan blocks, diagonals, nilpotent-or-diagonal TriMatrix, and
// DirectSum/Amplify/Power/TriBlock combinations thereof (adjoints are
// normalized away first).
bool graph_expressible(const ExprPtr& e);

// Lowers e to its basis graph. Throws NotGraphExpressible for out-of-class
// nodes and IndexOutOfSpace/InvalidWitness for bad TriBlock witnesses.
BasisGraph lower_to_graph(const ExprPtr& e);

ChainCensus chain_census(const BasisGraph& g);
ChainCensus chain_census(const ExprPtr& e);

// Graph-level combinators (shared by lowering and by the oracle's truncated
// predictor).
BasisGraph graph_amplify(const BasisGraph& g);
BasisGraph graph_power(const BasisGraph& g, long long m);

// Validates the witness against the lowered graphs of A and B and produces
// the merged graph of M_C. Group order: surviving A groups, surviving B
// groups, merged chains in entry order.
BasisGraph merge_tri_block(const BasisGraph& a, const WitnessMap& w, const BasisGraph& b);

// The spec-level assemble operation: validates and returns the TriBlock node.
ExprPtr assemble_block(const ExprPtr& a, const WitnessMap& w, const ExprPtr& b);

// ---------------------------------------------------------------------------
// Witness slots
//
// Kernel slots of a graph are the terminal vertices (backward rays, finite
// chains); cokernel slots are the initial vertices (forward rays, finite
// chains). The DSL addresses slots by a 1-based index into a deterministic
// diagonal enumeration: round r lists member r of every slotted group in
// group order, so infinite groups do not starve later ones.
// ---------------------------------------------------------------------------

struct SlotRef {
  int group = 0;
  std::uint64_t member = 0;
};

ExtNat kernel_slot_count(const BasisGraph& g);
ExtNat coker_slot_count(const BasisGraph& g);
std::optional<SlotRef> kernel_slot_by_index(const BasisGraph& g, std::uint64_t idx0);
std::optional<SlotRef> coker_slot_by_index(const BasisGraph& g, std::uint64_t idx0);

// Turns DSL-level explicit pairs / the pair-rays keyword into resolved
// witness entries for tri(A, ·, B).
WitnessMap resolve_witness(const BasisGraph& a_graph, const BasisGraph& b_graph,
                           const std::vector<ExplicitPair>& pairs, bool pair_rays,
                           GaussianRational ray_weight = GaussianRational(1));

}  // namespace samop
