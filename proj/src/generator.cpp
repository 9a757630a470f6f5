#include "samop/generator.hpp"

#include "samop/invariants.hpp"

namespace samop {

namespace {

// Small weight alphabet; keeps censuses readable and arithmetic fast.
const GaussianRational kWeights[] = {
    GaussianRational(1),
    GaussianRational(2),
    GaussianRational(mpq_class(1, 2)),
    GaussianRational::i(),
    GaussianRational(mpq_class(3, 5), mpq_class(4, 5)),
    GaussianRational(-1),
};

const GaussianRational kValues[] = {
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(2),
    GaussianRational::i(),
    GaussianRational(mpq_class(-1, 2)),
};

ExprPtr gen_atom(Rng& rng, const GenOptions& opt) {
  for (;;) {
    switch (rng.next(6)) {
      case 0: {
        GaussianRational mu = opt.allow_translated && rng.chance(35)
                                  ? kValues[1 + rng.next(4)]
                                  : GaussianRational(0);
        return shift(gen_weight(rng), mu);
      }
      case 1: {
        GaussianRational mu = opt.allow_translated && rng.chance(35)
                                  ? kValues[1 + rng.next(4)]
                                  : GaussianRational(0);
        return bshift(gen_weight(rng), mu);
      }
      case 2:
        return jordan(1 + static_cast<long long>(rng.next(4)));
      case 3: {
        if (!opt.allow_bilateral) break;
        return bilateral(gen_weight(rng));
      }
      case 4: {
        std::size_t count = 1 + rng.next(2);
        std::vector<std::pair<GaussianRational, ExtNat>> entries;
        std::uint64_t used = 0;
        for (std::size_t i = 0; i < count; ++i) {
          std::uint64_t vi = rng.next(5);
          if (used & (1ull << vi)) continue;
          used |= 1ull << vi;
          ExtNat mult = rng.chance(25) ? ext_inf() : ExtNat(1 + rng.next(3));
          entries.emplace_back(kValues[vi], mult);
        }
        if (entries.empty()) break;
        return diag(std::move(entries));
      }
      case 5: {
        if (!opt.allow_trimatrix) break;
        long n = 2 + static_cast<long>(rng.next(2));
        DenseMat m = DenseMat::Zero(n, n);
        if (rng.chance(50)) {
          // strictly upper (nilpotent)
          for (long r = 0; r < n; ++r)
            for (long c = r + 1; c < n; ++c)
              if (rng.chance(60)) m(r, c) = kWeights[rng.next(6)];
        } else {
          for (long r = 0; r < n; ++r) m(r, r) = kValues[rng.next(5)];
        }
        return trimatrix(std::move(m));
      }
    }
  }
}

ExprPtr gen_rec(Rng& rng, const GenOptions& opt, int depth) {
  if (depth >= opt.max_depth) return gen_atom(rng, opt);
  std::uint64_t roll = rng.next(100);
  if (roll < opt.sum_pct) {
    std::size_t parts = 2 + rng.next(2);
    std::vector<ExprPtr> ps;
    for (std::size_t i = 0; i < parts; ++i) ps.push_back(gen_rec(rng, opt, depth + 1));
    return direct_sum(std::move(ps));
  }
  roll -= opt.sum_pct;
  if (roll < opt.amplify_pct) return amplify(gen_rec(rng, opt, depth + 1));
  roll -= opt.amplify_pct;
  if (roll < opt.power_pct)
    return power(gen_rec(rng, opt, depth + 1), 2 + static_cast<long long>(rng.next(2)));
  roll -= opt.power_pct;
  if (roll < 8) return adjoint_node(gen_rec(rng, opt, depth + 1));
  return gen_atom(rng, opt);
}

}  // namespace

GaussianRational gen_weight(Rng& rng) { return kWeights[rng.next(6)]; }

ExprPtr gen_expr(Rng& rng, const GenOptions& opt) { return gen_rec(rng, opt, 0); }

ExprPtr gen_semi_fredholm(Rng& rng, const GenOptions& opt) {
  for (;;) {
    ExprPtr e = gen_expr(rng, opt);
    if (classify(e).semi_fredholm) return e;
  }
}

WitnessMap gen_witness(Rng& rng, const BasisGraph& a_graph, const BasisGraph& b_graph) {
  ExtNat kernels = kernel_slot_count(b_graph);
  ExtNat cokers = coker_slot_count(a_graph);
  if (rng.chance(20)) {
    // ray pairing when both sides have rays to pair
    bool b_has_bwd = false, a_has_fwd = false;
    for (const ChainGroup& g : b_graph.groups)
      b_has_bwd = b_has_bwd || (g.kind == ChainKind::BackwardRay && !g.count.is_zero());
    for (const ChainGroup& g : a_graph.groups)
      a_has_fwd = a_has_fwd || (g.kind == ChainKind::ForwardRay && !g.count.is_zero());
    if (b_has_bwd && a_has_fwd) return resolve_witness(a_graph, b_graph, {}, true);
  }
  std::uint64_t src_avail = kernels.is_inf() ? 6 : kernels.finite();
  std::uint64_t dst_avail = cokers.is_inf() ? 6 : cokers.finite();
  std::uint64_t most = std::min<std::uint64_t>({src_avail, dst_avail, 4});
  std::uint64_t count = most ? rng.next(most + 1) : 0;
  // random injections on both sides
  std::vector<ExplicitPair> pairs;
  std::vector<std::uint64_t> src, dst;
  for (std::uint64_t i = 1; i <= src_avail; ++i) src.push_back(i);
  for (std::uint64_t i = 1; i <= dst_avail; ++i) dst.push_back(i);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t si = rng.next(src.size());
    std::uint64_t di = rng.next(dst.size());
    ExplicitPair p;
    p.src_slot = src[si];
    p.dst_slot = dst[di];
    p.weight = rng.chance(30) ? gen_weight(rng) : GaussianRational(1);
    pairs.push_back(p);
    src.erase(src.begin() + static_cast<long>(si));
    dst.erase(dst.begin() + static_cast<long>(di));
  }
  return resolve_witness(a_graph, b_graph, pairs, false);
}

}  // namespace samop
