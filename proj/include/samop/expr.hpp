#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "samop/extnat.hpp"
#include "samop/matrix.hpp"
#include "samop/scalar.hpp"

namespace samop {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// ---------------------------------------------------------------------------
// Witness maps (the corner entry C of M_C = (A C; 0 B)).
//
// C is a basis-aligned weighted partial isometry: it sends kernel basis
// vectors of B (terminal vertices of backward rays / finite chains) to
// cokernel basis vectors of A (initial vertices of forward rays / finite
// chains). Entries are expressed against the chain groups of the lowered
// graphs of B and A; member indices address individual chains inside a group.
// ---------------------------------------------------------------------------

// Resolution of leftover capacity when ∞ many pairs are drawn from an ∞
// group. ExhaustSrc/Dst/Both record which side is fully consumed; the
// non-exhausted side keeps ∞ unpaired chains (interleaving enumeration).
enum class PairingPolicy { Exact, ExhaustSrc, ExhaustDst, ExhaustBoth };

struct WitnessEntry {
  int src_group = 0;  // group index in lower_to_graph(B)
  int dst_group = 0;  // group index in lower_to_graph(A)
  ExtNat paired;      // number of merged chain pairs
  PairingPolicy policy = PairingPolicy::Exact;
  GaussianRational weight = GaussianRational(1);
  // Explicit (src_member, dst_member) indices for finite user-specified
  // pairs; empty means the first `paired` members pair up i ↔ i.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> members;
};

// DSL-level pair "src -> dst : weight" with 1-based global slot indices.
struct ExplicitPair {
  std::uint64_t src_slot = 0;
  std::uint64_t dst_slot = 0;
  GaussianRational weight = GaussianRational(1);
};

struct WitnessMap {
  std::vector<WitnessEntry> entries;
  // Original DSL form, kept so pretty-printing round-trips.
  std::vector<ExplicitPair> source_pairs;
  bool from_pair_rays = false;

  bool empty() const { return entries.empty(); }
};

bool operator==(const WitnessEntry&, const WitnessEntry&);
bool operator==(const WitnessMap&, const WitnessMap&);

// ---------------------------------------------------------------------------
// AST nodes
// ---------------------------------------------------------------------------

struct ShiftNode {     // μI + c·U on ℓ²(ℕ)
  GaussianRational c, mu;
};
struct BackShiftNode {  // μI + c·U*
  GaussianRational c, mu;
};
struct BilateralNode {  // μI + c·W on ℓ²(ℤ)
  GaussianRational c, mu;
};
struct JordanNode {  // nilpotent Jordan block on ℂⁿ
  long long n = 1;
};
struct DiagNode {  // finitely many distinct values with ExtNat multiplicities
  std::vector<std::pair<GaussianRational, ExtNat>> entries;
};
struct TriMatrixNode {  // upper-triangular exact matrix
  DenseMat m;
};
struct DirectSumNode {
  std::vector<ExprPtr> parts;
};
struct AmplifyNode {  // countable direct sum of one operator
  ExprPtr inner;
};
struct PowerNode {
  ExprPtr inner;
  long long k = 1;
};
struct AdjointNode {
  ExprPtr inner;
};
struct TriBlockNode {  // M_C = (A C; 0 B) with basis-aligned C
  ExprPtr a;
  WitnessMap witness;
  ExprPtr b;
};

class Expr {
 public:
  using Node = std::variant<ShiftNode, BackShiftNode, BilateralNode, JordanNode,
                            DiagNode, TriMatrixNode, DirectSumNode, AmplifyNode,
                            PowerNode, AdjointNode, TriBlockNode>;

  explicit Expr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }

 private:
  Node node_;
};

// Validating constructors. All atom parameters are checked here so that any
// Expr in existence satisfies the AST invariants.
ExprPtr shift(GaussianRational c = GaussianRational(1),
              GaussianRational mu = GaussianRational(0));
ExprPtr bshift(GaussianRational c = GaussianRational(1),
               GaussianRational mu = GaussianRational(0));
ExprPtr bilateral(GaussianRational c = GaussianRational(1),
                  GaussianRational mu = GaussianRational(0));
ExprPtr jordan(long long n);
ExprPtr diag(std::vector<std::pair<GaussianRational, ExtNat>> entries);
ExprPtr trimatrix(DenseMat m);
ExprPtr direct_sum(std::vector<ExprPtr> parts);
ExprPtr amplify(ExprPtr inner);
ExprPtr power(ExprPtr inner, long long k);
ExprPtr adjoint_node(ExprPtr inner);
ExprPtr tri_block(ExprPtr a, WitnessMap witness, ExprPtr b);

// Structural adjoint rewrite: Shift ↔ BackShift with conjugated parameters,
// Diag conjugated, TriMatrix conjugate-transposed and re-triangularized by
// basis reversal, distributing over DirectSum/Amplify/Power. Adjoint of a
// TriBlock leaves the upper-triangular class and is rejected.
ExprPtr adjoint(const ExprPtr& e);

// Rewrite with no AdjointNode left (each Adjoint evaluated structurally).
ExprPtr normalize_adjoints(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// DSL text; parse(to_dsl(e)) reconstructs the same AST.
std::string to_dsl(const ExprPtr& e);

}  // namespace samop
