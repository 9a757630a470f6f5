#include "samop/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "samop/errors.hpp"
#include "samop/graph.hpp"

namespace samop {

namespace {

// Cut world convention, mirrored exactly by both paths:
//   rays and bi-infinite chains -> finite chains of length n,
//   finite chains of length L   -> length min(L, n),
//   ∞ counts (including every Amplify) -> n copies, finite counts kept,
//   TriMatrix blocks kept whole,
//   powers split cut chains along residue orbits (cut before power),
//   witness edges materialize while both endpoint slots survived the cut.

long long materialized(ExtNat count, int n) {
  return count.is_inf() ? n : static_cast<long long>(count.finite());
}

// ---------------------------------------------------------------------------
// predicted side: cut-chain combinatorics via the lowering machinery
// ---------------------------------------------------------------------------

struct PredChain {
  long long len = 0;
  bool used = false;  // consumed by a witness edge
};

struct PredGroup {
  std::vector<PredChain> chains;
  bool has_kernel = false;  // terminal slot survived the cut
  bool has_coker = false;
  long long passive = 0;  // loop copies / full-rank TriMatrix directions
};

struct PredProfile {
  std::vector<PredGroup> groups;
  std::vector<long long> merged;  // chains created by witness edges
  long long dim = 0;
};

PredProfile predict(const ExprPtr& e, int n);

PredGroup pred_from_chain_group(const ChainGroup& grp, int n) {
  PredGroup out;
  long long copies = materialized(grp.count, n);
  switch (grp.kind) {
    case ChainKind::ForwardRay:
      out.chains.assign(copies, {n, false});
      out.has_coker = true;
      break;
    case ChainKind::BackwardRay:
      out.chains.assign(copies, {n, false});
      out.has_kernel = true;
      break;
    case ChainKind::BiInfinite:
      out.chains.assign(copies, {n, false});
      break;
    case ChainKind::FiniteChain: {
      long long len = std::min<long long>(grp.len, n);
      out.chains.assign(copies, {len, false});
      out.has_coker = true;
      out.has_kernel = grp.len <= n;  // the true terminal survived the cut
      break;
    }
    case ChainKind::Loop:
      out.passive = copies;
      break;
  }
  return out;
}

PredGroup pred_power_group(const PredGroup& g, long long m) {
  PredGroup out;
  out.has_kernel = g.has_kernel;
  out.has_coker = g.has_coker;
  out.passive = g.passive;  // loops power to loops
  for (const PredChain& c : g.chains) {
    // residue orbits of a cut chain of length L: ⌈(L−r)/m⌉ for r = 0..m−1
    for (long long r = 0; r < m; ++r) {
      long long len = c.len > r ? (c.len - r - 1) / m + 1 : 0;
      if (len > 0) out.chains.push_back({len, false});
    }
  }
  return out;
}

PredProfile predict(const ExprPtr& expr, int n) {
  ExprPtr e = normalize_adjoints(expr);
  const Expr::Node& node = e->node();
  if (const auto* ds = std::get_if<DirectSumNode>(&node)) {
    PredProfile out;
    for (const ExprPtr& p : ds->parts) {
      PredProfile sub = predict(p, n);
      out.groups.insert(out.groups.end(), sub.groups.begin(), sub.groups.end());
      out.merged.insert(out.merged.end(), sub.merged.begin(), sub.merged.end());
    }
    return out;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&node)) {
    PredProfile inner = predict(a->inner, n);
    // n copies, grouped per inner group so member order stays copy-major
    PredProfile out;
    out.groups.resize(inner.groups.size());
    for (std::size_t g = 0; g < inner.groups.size(); ++g) {
      out.groups[g].has_kernel = inner.groups[g].has_kernel;
      out.groups[g].has_coker = inner.groups[g].has_coker;
      out.groups[g].passive = inner.groups[g].passive * n;
      for (int copy = 0; copy < n; ++copy)
        out.groups[g].chains.insert(out.groups[g].chains.end(),
                                    inner.groups[g].chains.begin(),
                                    inner.groups[g].chains.end());
    }
    for (int copy = 0; copy < n; ++copy)
      out.merged.insert(out.merged.end(), inner.merged.begin(), inner.merged.end());
    return out;
  }
  if (const auto* p = std::get_if<PowerNode>(&node)) {
    PredProfile inner = predict(p->inner, n);
    PredProfile out;
    out.groups.reserve(inner.groups.size());
    for (const PredGroup& g : inner.groups) out.groups.push_back(pred_power_group(g, p->k));
    PredGroup merged_holder;
    for (long long len : inner.merged) merged_holder.chains.push_back({len, false});
    PredGroup powered = pred_power_group(merged_holder, p->k);
    for (const PredChain& c : powered.chains) out.merged.push_back(c.len);
    return out;
  }
  if (const auto* t = std::get_if<TriBlockNode>(&node)) {
    PredProfile pa = predict(t->a, n);
    PredProfile pb = predict(t->b, n);
    std::vector<long long> merged;
    for (const WitnessEntry& we : t->witness.entries) {
      PredGroup& src = pb.groups[static_cast<std::size_t>(we.src_group)];
      PredGroup& dst = pa.groups[static_cast<std::size_t>(we.dst_group)];
      if (!src.has_kernel || !dst.has_coker) continue;  // slots cut away
      auto next_free = [](PredGroup& g, std::size_t from) {
        while (from < g.chains.size() && g.chains[from].used) ++from;
        return from;
      };
      if (!we.members.empty()) {
        for (const auto& [sm, dm] : we.members) {
          if (sm >= src.chains.size() || dm >= dst.chains.size()) continue;
          if (src.chains[sm].used || dst.chains[dm].used) continue;
          src.chains[sm].used = true;
          dst.chains[dm].used = true;
          merged.push_back(src.chains[sm].len + dst.chains[dm].len);
        }
      } else {
        long long want = we.paired.is_inf()
                             ? static_cast<long long>(src.chains.size())
                             : static_cast<long long>(we.paired.finite());
        std::size_t si = next_free(src, 0), di = next_free(dst, 0);
        for (long long k = 0; k < want; ++k) {
          if (si >= src.chains.size() || di >= dst.chains.size()) break;
          src.chains[si].used = true;
          dst.chains[di].used = true;
          merged.push_back(src.chains[si].len + dst.chains[di].len);
          si = next_free(src, si);
          di = next_free(dst, di);
        }
      }
    }
    // surviving A groups, then B groups, then merged chains (mirrors the
    // graph merge order)
    PredProfile out;
    for (PredGroup& g : pa.groups) {
      PredGroup kept;
      kept.has_kernel = g.has_kernel;
      kept.has_coker = g.has_coker;
      kept.passive = g.passive;
      for (const PredChain& c : g.chains)
        if (!c.used) kept.chains.push_back(c);
      out.groups.push_back(std::move(kept));
    }
    for (PredGroup& g : pb.groups) {
      PredGroup kept;
      kept.has_kernel = g.has_kernel;
      kept.has_coker = g.has_coker;
      kept.passive = g.passive;
      for (const PredChain& c : g.chains)
        if (!c.used) kept.chains.push_back(c);
      out.groups.push_back(std::move(kept));
    }
    out.merged = pa.merged;
    out.merged.insert(out.merged.end(), pb.merged.begin(), pb.merged.end());
    out.merged.insert(out.merged.end(), merged.begin(), merged.end());
    return out;
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&node)) {
    if (!is_diagonal(t->m)) {
      // nilpotent, kept whole: predicted through the Jordan structure from
      // lowering; similarity chains carry no witness slots
      BasisGraph g = lower_to_graph(e);
      PredProfile out;
      for (const ChainGroup& grp : g.groups) {
        PredGroup pg;
        long long copies = static_cast<long long>(grp.count.finite());
        pg.chains.assign(static_cast<std::size_t>(copies), {grp.len, false});
        out.groups.push_back(std::move(pg));
      }
      return out;
    }
    // diagonal matrices fall through to the basis-aligned atom path
  }
  // atoms (and anything else the lowering accepts)
  BasisGraph g = lower_to_graph(e);
  PredProfile out;
  for (const ChainGroup& grp : g.groups) out.groups.push_back(pred_from_chain_group(grp, n));
  return out;
}

long long profile_dim(const PredProfile& p) {
  long long dim = 0;
  for (const PredGroup& g : p.groups) {
    dim += g.passive;
    for (const PredChain& c : g.chains) dim += c.len;
  }
  for (long long len : p.merged) dim += len;
  return dim;
}

long long predicted_alpha(const PredProfile& p, long long k) {
  long long total = 0;
  for (const PredGroup& g : p.groups)
    for (const PredChain& c : g.chains) total += std::min(k, c.len);
  for (long long len : p.merged) total += std::min(k, len);
  return total;
}

// ---------------------------------------------------------------------------
// matrix side: structural compression of the AST
// ---------------------------------------------------------------------------

struct MatChain {
  std::vector<int> cols;  // initial -> terminal
  bool used = false;
};

struct MatGroup {
  std::vector<MatChain> chains;
  bool has_kernel = false;
  bool has_coker = false;
};

struct Trunc {
  std::vector<Triplet> trip;
  int dim = 0;
  std::vector<MatGroup> groups;
  std::vector<MatChain> merged;
};

int alloc(Trunc& t, int count) {
  int base = t.dim;
  t.dim += count;
  return base;
}

Trunc trunc_rec(const ExprPtr& e, int n);

void append_offset(Trunc& dst, const Trunc& src) {
  int off = dst.dim;
  dst.dim += src.dim;
  for (const Triplet& t : src.trip)
    dst.trip.emplace_back(t.row() + off, t.col() + off, t.value());
  for (const MatGroup& g : src.groups) {
    MatGroup ng;
    ng.has_kernel = g.has_kernel;
    ng.has_coker = g.has_coker;
    for (const MatChain& c : g.chains) {
      MatChain nc;
      for (int col : c.cols) nc.cols.push_back(col + off);
      ng.chains.push_back(std::move(nc));
    }
    dst.groups.push_back(std::move(ng));
  }
  for (const MatChain& c : src.merged) {
    MatChain nc;
    for (int col : c.cols) nc.cols.push_back(col + off);
    dst.merged.push_back(std::move(nc));
  }
}

// chain matrix: cols[i] -> cols[i+1] with weight w
void chain_edges(Trunc& t, const std::vector<int>& cols, const GaussianRational& w) {
  for (std::size_t i = 0; i + 1 < cols.size(); ++i)
    t.trip.emplace_back(cols[i + 1], cols[i], w);
}

Trunc trunc_atom_group(const ChainGroup& grp, int n) {
  Trunc t;
  MatGroup g;
  g.has_kernel = grp.has_kernel_slot();
  g.has_coker = grp.has_coker_slot();
  long long copies = materialized(grp.count, n);
  switch (grp.kind) {
    case ChainKind::ForwardRay:
    case ChainKind::BiInfinite: {
      for (long long c = 0; c < copies; ++c) {
        int base = alloc(t, n);
        MatChain mc;
        for (int i = 0; i < n; ++i) mc.cols.push_back(base + i);
        chain_edges(t, mc.cols, grp.tail);
        g.chains.push_back(std::move(mc));
      }
      break;
    }
    case ChainKind::BackwardRay: {
      // basis e₁(terminal)..e_n; chain runs from the cut end down to e₁
      for (long long c = 0; c < copies; ++c) {
        int base = alloc(t, n);
        MatChain mc;
        for (int i = n - 1; i >= 0; --i) mc.cols.push_back(base + i);
        chain_edges(t, mc.cols, grp.tail);
        g.chains.push_back(std::move(mc));
      }
      break;
    }
    case ChainKind::FiniteChain: {
      int len = static_cast<int>(std::min<long long>(grp.len, n));
      g.has_kernel = grp.len <= n;
      for (long long c = 0; c < copies; ++c) {
        int base = alloc(t, len);
        MatChain mc;
        for (int i = 0; i < len; ++i) mc.cols.push_back(base + i);
        chain_edges(t, mc.cols, grp.tail);
        g.chains.push_back(std::move(mc));
      }
      break;
    }
    case ChainKind::Loop: {
      g.has_kernel = g.has_coker = false;
      int base = alloc(t, static_cast<int>(copies));
      for (long long c = 0; c < copies; ++c)
        t.trip.emplace_back(base + static_cast<int>(c), base + static_cast<int>(c),
                            grp.tail);
      break;
    }
  }
  t.groups.push_back(std::move(g));
  return t;
}

MatChain power_subchain(const MatChain& c, long long m, long long r) {
  MatChain out;
  for (std::size_t i = static_cast<std::size_t>(r); i < c.cols.size();
       i += static_cast<std::size_t>(m))
    out.cols.push_back(c.cols[i]);
  return out;
}

Trunc trunc_rec(const ExprPtr& expr, int n) {
  ExprPtr e = normalize_adjoints(expr);
  const Expr::Node& node = e->node();
  if (const auto* ds = std::get_if<DirectSumNode>(&node)) {
    Trunc out;
    for (const ExprPtr& p : ds->parts) append_offset(out, trunc_rec(p, n));
    return out;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&node)) {
    Trunc inner = trunc_rec(a->inner, n);
    Trunc out;
    std::vector<Trunc> copies;
    // lay out n copies back to back, then regroup copy-major per group
    std::vector<int> offsets;
    for (int c = 0; c < n; ++c) {
      offsets.push_back(out.dim);
      int off = out.dim;
      out.dim += inner.dim;
      for (const Triplet& t : inner.trip)
        out.trip.emplace_back(t.row() + off, t.col() + off, t.value());
    }
    out.groups.resize(inner.groups.size());
    for (std::size_t g = 0; g < inner.groups.size(); ++g) {
      out.groups[g].has_kernel = inner.groups[g].has_kernel;
      out.groups[g].has_coker = inner.groups[g].has_coker;
      for (int c = 0; c < n; ++c)
        for (const MatChain& mc : inner.groups[g].chains) {
          MatChain nc;
          for (int col : mc.cols) nc.cols.push_back(col + offsets[static_cast<std::size_t>(c)]);
          out.groups[g].chains.push_back(std::move(nc));
        }
    }
    for (int c = 0; c < n; ++c)
      for (const MatChain& mc : inner.merged) {
        MatChain nc;
        for (int col : mc.cols) nc.cols.push_back(col + offsets[static_cast<std::size_t>(c)]);
        out.merged.push_back(std::move(nc));
      }
    return out;
  }
  if (const auto* p = std::get_if<PowerNode>(&node)) {
    Trunc inner = trunc_rec(p->inner, n);
    Trunc out;
    out.dim = inner.dim;
    // matrix power
    SpMat m(inner.dim, inner.dim);
    m.setFromTriplets(inner.trip.begin(), inner.trip.end());
    SpMat mp = sparse_pow(m, p->k);
    for (int k = 0; k < mp.outerSize(); ++k)
      for (SpMat::InnerIterator it(mp, k); it; ++it)
        if (!it.value().is_zero())
          out.trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                                it.value());
    // chains split along residue orbits
    for (const MatGroup& g : inner.groups) {
      MatGroup ng;
      ng.has_kernel = g.has_kernel;
      ng.has_coker = g.has_coker;
      for (const MatChain& c : g.chains)
        for (long long r = 0; r < p->k; ++r) {
          MatChain sub = power_subchain(c, p->k, r);
          if (!sub.cols.empty()) ng.chains.push_back(std::move(sub));
        }
      out.groups.push_back(std::move(ng));
    }
    for (const MatChain& c : inner.merged)
      for (long long r = 0; r < p->k; ++r) {
        MatChain sub = power_subchain(c, p->k, r);
        if (!sub.cols.empty()) out.merged.push_back(std::move(sub));
      }
    return out;
  }
  if (const auto* tb = std::get_if<TriBlockNode>(&node)) {
    Trunc ta = trunc_rec(tb->a, n);
    Trunc out = std::move(ta);
    std::vector<MatGroup> a_groups = std::move(out.groups);
    std::vector<MatChain> a_merged = std::move(out.merged);
    out.groups.clear();
    out.merged.clear();
    Trunc tb_t = trunc_rec(tb->b, n);
    std::vector<MatGroup> b_groups;
    {
      Trunc holder;
      holder.dim = out.dim;
      holder.trip = std::move(out.trip);
      append_offset(holder, tb_t);
      out.trip = std::move(holder.trip);
      out.dim = holder.dim;
      // groups of the holder are tb_t's offset groups
      b_groups = std::move(holder.groups);
      for (MatChain& c : holder.merged) a_merged.push_back(std::move(c));
    }
    std::vector<MatChain> merged;
    for (const WitnessEntry& we : tb->witness.entries) {
      MatGroup& src = b_groups[static_cast<std::size_t>(we.src_group)];
      MatGroup& dst = a_groups[static_cast<std::size_t>(we.dst_group)];
      if (!src.has_kernel || !dst.has_coker) continue;
      auto next_free = [](MatGroup& g, std::size_t from) {
        while (from < g.chains.size() && g.chains[from].used) ++from;
        return from;
      };
      auto link = [&](MatChain& s, MatChain& d) {
        s.used = true;
        d.used = true;
        // C sends the terminal basis vector of the B-chain to the initial
        // basis vector of the A-chain
        out.trip.emplace_back(d.cols.front(), s.cols.back(), we.weight);
        MatChain joined;
        joined.cols = s.cols;
        joined.cols.insert(joined.cols.end(), d.cols.begin(), d.cols.end());
        merged.push_back(std::move(joined));
      };
      if (!we.members.empty()) {
        for (const auto& [sm, dm] : we.members) {
          if (sm >= src.chains.size() || dm >= dst.chains.size()) continue;
          if (src.chains[sm].used || dst.chains[dm].used) continue;
          link(src.chains[sm], dst.chains[dm]);
        }
      } else {
        long long want = we.paired.is_inf()
                             ? static_cast<long long>(src.chains.size())
                             : static_cast<long long>(we.paired.finite());
        std::size_t si = next_free(src, 0), di = next_free(dst, 0);
        for (long long k = 0; k < want; ++k) {
          if (si >= src.chains.size() || di >= dst.chains.size()) break;
          link(src.chains[si], dst.chains[di]);
          si = next_free(src, si);
          di = next_free(dst, di);
        }
      }
    }
    auto surviving = [](std::vector<MatGroup>& gs, std::vector<MatGroup>& into) {
      for (MatGroup& g : gs) {
        MatGroup kept;
        kept.has_kernel = g.has_kernel;
        kept.has_coker = g.has_coker;
        for (MatChain& c : g.chains)
          if (!c.used) kept.chains.push_back(std::move(c));
        into.push_back(std::move(kept));
      }
    };
    surviving(a_groups, out.groups);
    surviving(b_groups, out.groups);
    out.merged = std::move(a_merged);
    out.merged.insert(out.merged.end(), std::make_move_iterator(merged.begin()),
                      std::make_move_iterator(merged.end()));
    return out;
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&node)) {
    if (!graph_expressible(e))
      fail(ErrorKind::NotGraphExpressible, "truncation needs a graph-expressible matrix");
    if (is_diagonal(t->m)) {
      // basis-aligned: materialize per lowered group so witness slots line up
      BasisGraph g = lower_to_graph(e);
      Trunc out;
      for (const ChainGroup& grp : g.groups) append_offset(out, trunc_atom_group(grp, n));
      return out;
    }
    // nilpotent: the original entries verbatim; its similarity chains are not
    // basis-aligned, so the groups carry no witness slots
    Trunc out;
    int m = static_cast<int>(t->m.rows());
    int base = alloc(out, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if (!t->m(r, c).is_zero()) out.trip.emplace_back(base + r, base + c, t->m(r, c));
    BasisGraph g = lower_to_graph(e);
    for (std::size_t i = 0; i < g.groups.size(); ++i) out.groups.emplace_back();
    return out;
  }
  // plain atoms
  BasisGraph g = lower_to_graph(e);
  Trunc out;
  for (const ChainGroup& grp : g.groups) append_offset(out, trunc_atom_group(grp, n));
  return out;
}

}  // namespace

SpMat truncate(const ExprPtr& e, int n) {
  if (n < 1) fail(ErrorKind::ArityDomain, "truncation size must be >= 1");
  Trunc t = trunc_rec(e, n);
  SpMat m(t.dim, t.dim);
  m.setFromTriplets(t.trip.begin(), t.trip.end());
  return m;
}

long long truncated_dim(const ExprPtr& e, int n) {
  return profile_dim(predict(e, n));
}

std::string TruncationReport::str() const {
  std::ostringstream os;
  os << "n = " << n << ", dim = " << dim << ", k ≤ " << k_max << ": ";
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) os << ", ";
    os << "α(M^" << k << ") " << computed[static_cast<std::size_t>(k - 1)]
       << (predicted[static_cast<std::size_t>(k - 1)] == computed[static_cast<std::size_t>(k - 1)]
               ? " = "
               : " ≠ ")
       << predicted[static_cast<std::size_t>(k - 1)] << " (predicted)";
  }
  os << (match ? " — match" : " — MISMATCH");
  return os.str();
}

TruncationReport truncated_growth_check(const ExprPtr& e, int n, int k_max) {
  if (n < 1 || k_max < 1) fail(ErrorKind::ArityDomain, "need n >= 1 and k_max >= 1");
  TruncationReport rep;
  rep.n = n;
  rep.k_max = k_max;
  PredProfile prof = predict(e, n);
  SpMat m = truncate(e, n);
  if (m.rows() != profile_dim(prof))
    fail(ErrorKind::Internal, "predicted and materialized dimensions differ");
  rep.dim = m.rows();
  rep.match = true;
  SpMat mk = m;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) mk = SpMat(mk * m);
    long long computed = rep.dim - exact_rank(mk);
    long long predicted = predicted_alpha(prof, k);
    rep.computed.push_back(computed);
    rep.predicted.push_back(predicted);
    if (computed != predicted) rep.match = false;
  }
  return rep;
}

}  // namespace samop
