#include "samop/graph.hpp"

#include <algorithm>
#include <sstream>

#include "samop/errors.hpp"
#include "samop/matrix.hpp"

namespace samop {

ChainCensus& ChainCensus::add(const ChainCensus& o) {
  for (const auto& [len, cnt] : o.finite_chains) finite_chains[len] += cnt;
  forward_rays += o.forward_rays;
  backward_rays += o.backward_rays;
  bi_infinite += o.bi_infinite;
  return *this;
}

ChainCensus ChainCensus::amplified() const {
  ChainCensus out;
  for (const auto& [len, cnt] : finite_chains)
    if (!cnt.is_zero()) out.finite_chains[len] = ext_inf();
  out.forward_rays = forward_rays.amplified();
  out.backward_rays = backward_rays.amplified();
  out.bi_infinite = bi_infinite.amplified();
  return out;
}

std::string ChainCensus::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  auto item = [&](const std::string& k, const std::string& v) {
    if (!first) os << ", ";
    os << k << ": " << v;
    first = false;
  };
  for (const auto& [len, cnt] : finite_chains)
    if (!cnt.is_zero()) item("chain_" + std::to_string(len), cnt.str());
  if (!forward_rays.is_zero()) item("forward_rays", forward_rays.str());
  if (!backward_rays.is_zero()) item("backward_rays", backward_rays.str());
  if (!bi_infinite.is_zero()) item("bi_infinite", bi_infinite.str());
  os << "}";
  return os.str();
}

ChainCensus chain_census(const BasisGraph& g) {
  ChainCensus out;
  for (const ChainGroup& grp : g.groups) {
    if (grp.count.is_zero()) continue;
    switch (grp.kind) {
      case ChainKind::FiniteChain:
        out.finite_chains[grp.len] += grp.count;
        break;
      case ChainKind::ForwardRay:
        out.forward_rays += grp.count;
        break;
      case ChainKind::BackwardRay:
        out.backward_rays += grp.count;
        break;
      case ChainKind::BiInfinite:
        out.bi_infinite += grp.count;
        break;
      case ChainKind::Loop:
        break;  // invertible summand, not part of the census
    }
  }
  return out;
}

ChainCensus chain_census(const ExprPtr& e) { return chain_census(lower_to_graph(e)); }

// ---------------------------------------------------------------------------
// graph expressibility + lowering
// ---------------------------------------------------------------------------

namespace {

bool trimatrix_lowerable(const DenseMat& m) {
  return strictly_upper(m) || is_diagonal(m);
}

bool graph_expressible_rec(const ExprPtr& e) {
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) return s->mu.is_zero();
  if (const auto* s = std::get_if<BackShiftNode>(&n)) return s->mu.is_zero();
  if (const auto* s = std::get_if<BilateralNode>(&n)) return s->mu.is_zero();
  if (e->is<JordanNode>() || e->is<DiagNode>()) return true;
  if (const auto* t = std::get_if<TriMatrixNode>(&n)) return trimatrix_lowerable(t->m);
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    for (const ExprPtr& p : ds->parts)
      if (!graph_expressible_rec(p)) return false;
    return true;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) return graph_expressible_rec(a->inner);
  if (const auto* p = std::get_if<PowerNode>(&n)) return graph_expressible_rec(p->inner);
  if (const auto* t = std::get_if<TriBlockNode>(&n))
    return graph_expressible_rec(t->a) && graph_expressible_rec(t->b);
  return false;  // AdjointNode is normalized away before we get here
}

ChainGroup make_group(ChainKind kind, ExtNat count, GaussianRational tail,
                      long long len = 1) {
  ChainGroup g;
  g.kind = kind;
  g.count = count;
  g.tail = tail;
  g.tail_left = tail;
  g.len = len;
  return g;
}

// Jordan structure of a strictly upper-triangular (nilpotent) matrix by rank
// chains: the number of blocks of size >= k is α(Mᵏ) − α(Mᵏ⁻¹).
std::vector<long long> nilpotent_block_sizes(const DenseMat& m) {
  const long n = m.rows();
  std::vector<long long> alpha = {0};  // alpha[k] = dim N(M^k)
  DenseMat p = DenseMat::Identity(n, n);
  for (long k = 1; k <= n; ++k) {
    p = p * m;
    alpha.push_back(n - exact_rank(p));
    if (alpha[k] == n) break;
  }
  while (alpha.back() != n) alpha.push_back(n);  // nilpotent: reaches n
  std::vector<long long> blocks;  // one entry per block, its size
  for (std::size_t k = 1; k < alpha.size(); ++k) {
    long long geq_k = alpha[k] - alpha[k - 1];
    long long geq_k1 = k + 1 < alpha.size() ? alpha[k + 1] - alpha[k] : 0;
    for (long long b = 0; b < geq_k - geq_k1; ++b)
      blocks.push_back(static_cast<long long>(k));
  }
  return blocks;
}

void lower_rec(const ExprPtr& e, BasisGraph& out);

BasisGraph lower_sub(const ExprPtr& e) {
  BasisGraph g;
  lower_rec(e, g);
  return g;
}

void lower_rec(const ExprPtr& e, BasisGraph& out) {
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) {
    if (!s->mu.is_zero())
      fail(ErrorKind::NotGraphExpressible, "translated shift (μ ≠ 0) has no basis graph");
    out.groups.push_back(make_group(ChainKind::ForwardRay, ExtNat(1), s->c));
    return;
  }
  if (const auto* s = std::get_if<BackShiftNode>(&n)) {
    if (!s->mu.is_zero())
      fail(ErrorKind::NotGraphExpressible, "translated bshift (μ ≠ 0) has no basis graph");
    out.groups.push_back(make_group(ChainKind::BackwardRay, ExtNat(1), s->c));
    return;
  }
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    if (!s->mu.is_zero())
      fail(ErrorKind::NotGraphExpressible, "translated bilateral (μ ≠ 0) has no basis graph");
    out.groups.push_back(make_group(ChainKind::BiInfinite, ExtNat(1), s->c));
    return;
  }
  if (const auto* j = std::get_if<JordanNode>(&n)) {
    out.groups.push_back(make_group(ChainKind::FiniteChain, ExtNat(1), GaussianRational(1), j->n));
    return;
  }
  if (const auto* d = std::get_if<DiagNode>(&n)) {
    for (const auto& [v, m] : d->entries) {
      if (v.is_zero())
        out.groups.push_back(make_group(ChainKind::FiniteChain, m, GaussianRational(1), 1));
      else
        out.groups.push_back(make_group(ChainKind::Loop, m, v));
    }
    return;
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n)) {
    if (is_diagonal(t->m)) {
      // Diagonal matrices are basis-aligned: each basis vector is a loop or a
      // length-1 chain on its own.
      for (long i = 0; i < t->m.rows(); ++i) {
        GaussianRational v = t->m(i, i);
        if (v.is_zero())
          out.groups.push_back(make_group(ChainKind::FiniteChain, ExtNat(1), GaussianRational(1), 1));
        else
          out.groups.push_back(make_group(ChainKind::Loop, ExtNat(1), v));
      }
      return;
    }
    if (strictly_upper(t->m)) {
      // Similarity chains; dimensions of kernels of powers are preserved, but
      // the chains are not spanned by standard basis vectors.
      for (long long b : nilpotent_block_sizes(t->m)) {
        ChainGroup g = make_group(ChainKind::FiniteChain, ExtNat(1), GaussianRational(1), b);
        g.basis_aligned = false;
        out.groups.push_back(g);
      }
      return;
    }
    fail(ErrorKind::NotGraphExpressible,
         "trimat is lowered only when nilpotent or diagonal");
  }
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    for (const ExprPtr& p : ds->parts) lower_rec(p, out);
    return;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) {
    BasisGraph inner = lower_sub(a->inner);
    BasisGraph amped = graph_amplify(inner);
    out.groups.insert(out.groups.end(), amped.groups.begin(), amped.groups.end());
    return;
  }
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    BasisGraph inner = lower_sub(p->inner);
    BasisGraph powed = graph_power(inner, p->k);
    out.groups.insert(out.groups.end(), powed.groups.begin(), powed.groups.end());
    return;
  }
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    BasisGraph ga = lower_sub(t->a);
    BasisGraph gb = lower_sub(t->b);
    BasisGraph merged = merge_tri_block(ga, t->witness, gb);
    out.groups.insert(out.groups.end(), merged.groups.begin(), merged.groups.end());
    return;
  }
  fail(ErrorKind::NotGraphExpressible, "expression is outside the basis-graph class");
}

}  // namespace

bool graph_expressible(const ExprPtr& e) {
  return graph_expressible_rec(normalize_adjoints(e));
}

BasisGraph lower_to_graph(const ExprPtr& e) { return lower_sub(normalize_adjoints(e)); }

BasisGraph graph_amplify(const BasisGraph& g) {
  BasisGraph out;
  out.groups.reserve(g.groups.size());
  for (ChainGroup grp : g.groups) {
    grp.count = grp.count.amplified();
    out.groups.push_back(grp);
  }
  return out;
}

BasisGraph graph_power(const BasisGraph& g, long long m) {
  if (m == 1) return g;
  BasisGraph out;
  for (const ChainGroup& grp : g.groups) {
    switch (grp.kind) {
      case ChainKind::ForwardRay:
      case ChainKind::BackwardRay:
      case ChainKind::BiInfinite: {
        // A ray splits into m rays of the same kind along power orbits.
        ChainGroup p = grp;
        p.count = grp.count * ExtNat(static_cast<std::uint64_t>(m));
        p.tail = grp.tail.pow(m);
        p.tail_left = grp.tail_left.pow(m);
        out.groups.push_back(p);
        break;
      }
      case ChainKind::Loop: {
        ChainGroup p = grp;
        p.tail = grp.tail.pow(m);
        p.tail_left = p.tail;
        out.groups.push_back(p);
        break;
      }
      case ChainKind::FiniteChain: {
        // A chain of length L splits into residue chains of lengths
        // ⌈(L−r)/m⌉, r = 0..m−1: s = L mod m chains of length ⌊L/m⌋+1 and
        // (m−s) chains of length ⌊L/m⌋ (dropped when zero).
        long long q = grp.len / m;
        long long s = grp.len % m;
        if (s > 0) {
          ChainGroup p = grp;
          p.len = q + 1;
          p.count = grp.count * ExtNat(static_cast<std::uint64_t>(s));
          out.groups.push_back(p);
        }
        if (q > 0) {
          ChainGroup p = grp;
          p.len = q;
          p.count = grp.count * ExtNat(static_cast<std::uint64_t>(m - s));
          out.groups.push_back(p);
        }
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness slots
// ---------------------------------------------------------------------------

namespace {

template <class HasSlot>
ExtNat slot_count(const BasisGraph& g, HasSlot has) {
  ExtNat total(0);
  for (const ChainGroup& grp : g.groups)
    if (has(grp)) total += grp.count;
  return total;
}

template <class HasSlot>
std::optional<SlotRef> slot_by_index(const BasisGraph& g, std::uint64_t idx0, HasSlot has) {
  // Diagonal enumeration: rounds of one member per slotted group.
  std::uint64_t seen = 0;
  for (std::uint64_t round = 0;; ++round) {
    bool any = false;
    for (int gi = 0; gi < static_cast<int>(g.groups.size()); ++gi) {
      const ChainGroup& grp = g.groups[gi];
      if (!has(grp)) continue;
      if (ExtNat(round) >= grp.count) continue;
      any = true;
      if (seen == idx0) return SlotRef{gi, round};
      ++seen;
    }
    if (!any) return std::nullopt;
  }
}

bool has_kernel(const ChainGroup& g) { return g.has_kernel_slot() && !g.count.is_zero(); }
bool has_coker(const ChainGroup& g) { return g.has_coker_slot() && !g.count.is_zero(); }

}  // namespace

ExtNat kernel_slot_count(const BasisGraph& g) { return slot_count(g, has_kernel); }
ExtNat coker_slot_count(const BasisGraph& g) { return slot_count(g, has_coker); }

std::optional<SlotRef> kernel_slot_by_index(const BasisGraph& g, std::uint64_t idx0) {
  if (kernel_slot_count(g) <= ExtNat(idx0)) return std::nullopt;
  return slot_by_index(g, idx0, has_kernel);
}

std::optional<SlotRef> coker_slot_by_index(const BasisGraph& g, std::uint64_t idx0) {
  if (coker_slot_count(g) <= ExtNat(idx0)) return std::nullopt;
  return slot_by_index(g, idx0, has_coker);
}

// ---------------------------------------------------------------------------
// TriBlock merging
// ---------------------------------------------------------------------------

namespace {

ChainGroup merged_chain(const ChainGroup& src, const ChainGroup& dst, ExtNat count) {
  ChainGroup out;
  out.count = count;
  out.witness_merged = true;
  out.basis_aligned = true;
  if (src.kind == ChainKind::BackwardRay && dst.kind == ChainKind::ForwardRay) {
    out.kind = ChainKind::BiInfinite;
    out.tail_left = src.tail;
    out.tail = dst.tail;
  } else if (src.kind == ChainKind::BackwardRay && dst.kind == ChainKind::FiniteChain) {
    out.kind = ChainKind::BackwardRay;
    out.tail = src.tail;
    out.tail_left = src.tail;
  } else if (src.kind == ChainKind::FiniteChain && dst.kind == ChainKind::ForwardRay) {
    out.kind = ChainKind::ForwardRay;
    out.tail = dst.tail;
    out.tail_left = dst.tail;
  } else {  // FiniteChain + FiniteChain
    out.kind = ChainKind::FiniteChain;
    out.len = src.len + dst.len;
    out.witness_merged = false;  // a plain nilpotent cell again
  }
  return out;
}

struct SideUse {
  ExtNat used = ExtNat(0);
  bool exhausted = false;
  std::vector<std::uint64_t> members;  // explicitly consumed member indices
};

void consume(SideUse& use, const ChainGroup& grp, ExtNat amount, bool exhaust,
             const std::vector<std::uint64_t>& members, const char* side) {
  if (use.exhausted)
    fail(ErrorKind::InvalidWitness, std::string(side) + " group already fully paired");
  for (std::uint64_t m : members) {
    if (ExtNat(m) >= grp.count)
      fail(ErrorKind::IndexOutOfSpace,
           std::string(side) + " member index exceeds group count");
    for (std::uint64_t seen : use.members)
      if (seen == m)
        fail(ErrorKind::InvalidWitness,
             std::string(side) + " basis vector paired twice");
    use.members.push_back(m);
  }
  use.used += amount;
  if (use.used > grp.count)
    fail(ErrorKind::InvalidWitness, std::string(side) + " group capacity exceeded");
  if (amount.is_inf() && !grp.count.is_inf())
    fail(ErrorKind::InvalidWitness, "infinite pairing drawn from a finite group");
  if (exhaust) use.exhausted = true;
}

ExtNat remaining(const SideUse& use, const ChainGroup& grp) {
  if (use.exhausted) return ExtNat(0);
  if (grp.count.is_inf()) return ext_inf();  // interleaving: ∞ minus ∞ used stays ∞
  return *grp.count.checked_sub(use.used);
}

}  // namespace

BasisGraph merge_tri_block(const BasisGraph& a, const WitnessMap& w, const BasisGraph& b) {
  std::vector<SideUse> use_a(a.groups.size()), use_b(b.groups.size());
  std::vector<ChainGroup> merged;

  for (const WitnessEntry& e : w.entries) {
    if (e.src_group < 0 || e.src_group >= static_cast<int>(b.groups.size()) ||
        e.dst_group < 0 || e.dst_group >= static_cast<int>(a.groups.size()))
      fail(ErrorKind::IndexOutOfSpace, "witness references a missing chain group");
    const ChainGroup& src = b.groups[e.src_group];
    const ChainGroup& dst = a.groups[e.dst_group];
    if (!src.has_kernel_slot())
      fail(ErrorKind::InvalidWitness,
           "witness source must be a kernel basis vector of B (backward ray or finite chain)");
    if (!dst.has_coker_slot())
      fail(ErrorKind::InvalidWitness,
           "witness target must be a cokernel basis vector of A (forward ray or finite chain)");
    if (!src.basis_aligned || !dst.basis_aligned)
      fail(ErrorKind::InvalidWitness,
           "witness endpoints must reference basis-aligned chains");
    if (e.weight.is_zero()) fail(ErrorKind::InvalidWitness, "witness weight is zero");
    if (e.paired.is_zero()) continue;
    if (!e.members.empty() &&
        (e.paired.is_inf() || ExtNat(e.members.size()) != e.paired))
      fail(ErrorKind::InvalidWitness, "explicit member list does not match pair count");

    std::vector<std::uint64_t> src_members, dst_members;
    for (const auto& [s, d] : e.members) {
      src_members.push_back(s);
      dst_members.push_back(d);
    }
    bool exhaust_src = e.policy == PairingPolicy::ExhaustSrc || e.policy == PairingPolicy::ExhaustBoth;
    bool exhaust_dst = e.policy == PairingPolicy::ExhaustDst || e.policy == PairingPolicy::ExhaustBoth;
    consume(use_b[e.src_group], src, e.paired, exhaust_src, src_members, "source");
    consume(use_a[e.dst_group], dst, e.paired, exhaust_dst, dst_members, "target");
    merged.push_back(merged_chain(src, dst, e.paired));
  }

  BasisGraph out;
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    ChainGroup g = a.groups[i];
    g.count = remaining(use_a[i], g);
    out.groups.push_back(g);  // kept even at count 0 to preserve group indices
  }
  for (std::size_t i = 0; i < b.groups.size(); ++i) {
    ChainGroup g = b.groups[i];
    g.count = remaining(use_b[i], g);
    out.groups.push_back(g);
  }
  out.groups.insert(out.groups.end(), merged.begin(), merged.end());
  return out;
}

ExprPtr assemble_block(const ExprPtr& a, const WitnessMap& w, const ExprPtr& b) {
  // Validation happens by running the merge once.
  merge_tri_block(lower_to_graph(a), w, lower_to_graph(b));
  return tri_block(a, w, b);
}

WitnessMap resolve_witness(const BasisGraph& a_graph, const BasisGraph& b_graph,
                           const std::vector<ExplicitPair>& pairs, bool pair_rays,
                           GaussianRational ray_weight) {
  WitnessMap out;
  out.source_pairs = pairs;
  out.from_pair_rays = pair_rays;
  if (pair_rays) {
    // Pair backward rays of B with forward rays of A, up to min of the two
    // totals, in deterministic group order. An ∞ × ∞ meeting pairs by the
    // interleaving enumeration: the source group is exhausted, the target
    // keeps infinitely many unpaired rays.
    ExtNat left = min(
        slot_count(b_graph, [](const ChainGroup& g) {
          return g.kind == ChainKind::BackwardRay && !g.count.is_zero();
        }),
        slot_count(a_graph, [](const ChainGroup& g) {
          return g.kind == ChainKind::ForwardRay && !g.count.is_zero();
        }));
    std::size_t ai = 0;
    std::vector<std::pair<int, ExtNat>> a_slots;  // forward-ray groups with capacity
    for (int i = 0; i < static_cast<int>(a_graph.groups.size()); ++i)
      if (a_graph.groups[i].kind == ChainKind::ForwardRay &&
          !a_graph.groups[i].count.is_zero())
        a_slots.emplace_back(i, a_graph.groups[i].count);
    for (int bi = 0; bi < static_cast<int>(b_graph.groups.size()) && !left.is_zero(); ++bi) {
      const ChainGroup& src = b_graph.groups[bi];
      if (src.kind != ChainKind::BackwardRay || src.count.is_zero()) continue;
      ExtNat from_src = min(src.count, left);
      while (!from_src.is_zero() && ai < a_slots.size()) {
        auto& [agi, cap] = a_slots[ai];
        ExtNat take = min(from_src, cap);
        WitnessEntry e;
        e.src_group = bi;
        e.dst_group = agi;
        e.paired = take;
        e.weight = ray_weight;
        out.entries.push_back(e);
        if (take.is_inf()) {
          out.entries.back().policy = PairingPolicy::ExhaustSrc;
          from_src = ExtNat(0);  // source group fully paired; target keeps ∞
        } else {
          from_src = *from_src.checked_sub(take);
          if (!left.is_inf()) left = *left.checked_sub(take);
          cap = *cap.checked_sub(take);
          if (cap.is_zero()) ++ai;
        }
      }
    }
    return out;
  }

  for (const ExplicitPair& p : pairs) {
    if (p.src_slot == 0 || p.dst_slot == 0)
      fail(ErrorKind::IndexOutOfSpace, "witness slot indices are 1-based");
    auto src = kernel_slot_by_index(b_graph, p.src_slot - 1);
    if (!src)
      fail(ErrorKind::IndexOutOfSpace,
           "witness source slot " + std::to_string(p.src_slot) +
               " exceeds the kernel basis of B");
    auto dst = coker_slot_by_index(a_graph, p.dst_slot - 1);
    if (!dst)
      fail(ErrorKind::IndexOutOfSpace,
           "witness target slot " + std::to_string(p.dst_slot) +
               " exceeds the cokernel basis of A");
    WitnessEntry e;
    e.src_group = src->group;
    e.dst_group = dst->group;
    e.paired = ExtNat(1);
    e.weight = p.weight;
    e.members.emplace_back(src->member, dst->member);
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace samop
