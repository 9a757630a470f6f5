#include "samop/completion.hpp"

#include <sstream>

#include "samop/errors.hpp"
#include "samop/invariants.hpp"

namespace samop {

const char* completion_token(CompletionKind k) {
  switch (k) {
    case CompletionKind::LeftInvertible:
      return "left_inv";
    case CompletionKind::UpperBrowder:
      return "ab";
    case CompletionKind::LowerBrowder:
      return "sb";
    case CompletionKind::Browder:
      return "b";
  }
  return "?";
}

std::optional<CompletionKind> completion_from_token(const std::string& token) {
  if (token == "left_inv" || token == "left-inv") return CompletionKind::LeftInvertible;
  if (token == "ab") return CompletionKind::UpperBrowder;
  if (token == "sb") return CompletionKind::LowerBrowder;
  if (token == "b") return CompletionKind::Browder;
  return std::nullopt;
}

std::string CompletionVerdict::str() const {
  std::ostringstream os;
  os << (possible ? "possible" : "impossible") << " [" << rule << "]";
  if (!detail.empty()) os << " " << detail;
  return os.str();
}

namespace {

// Slot pools for witness construction: (group index, capacity).
using Pool = std::vector<std::pair<int, ExtNat>>;

Pool kernel_pool(const BasisGraph& g, bool rays_only) {
  Pool out;
  for (int i = 0; i < static_cast<int>(g.groups.size()); ++i) {
    const ChainGroup& grp = g.groups[i];
    if (grp.count.is_zero() || !grp.has_kernel_slot()) continue;
    if (rays_only && grp.kind != ChainKind::BackwardRay) continue;
    out.emplace_back(i, grp.count);
  }
  return out;
}

Pool coker_pool(const BasisGraph& g, bool rays_only) {
  Pool out;
  for (int i = 0; i < static_cast<int>(g.groups.size()); ++i) {
    const ChainGroup& grp = g.groups[i];
    if (grp.count.is_zero() || !grp.has_coker_slot()) continue;
    if (rays_only && grp.kind != ChainKind::ForwardRay) continue;
    out.emplace_back(i, grp.count);
  }
  return out;
}

enum class PairMode {
  ExhaustSources,  // consume every source slot; ∞ targets keep ∞ unpaired
  ExhaustTargets,  // mirror image
  Bijective,       // consume both sides entirely (the Browder construction)
};

WitnessEntry make_entry(int sg, int dg, ExtNat paired, PairingPolicy policy) {
  WitnessEntry e;
  e.src_group = sg;
  e.dst_group = dg;
  e.paired = paired;
  e.policy = policy;
  e.weight = GaussianRational(1);
  return e;
}

// Deterministic greedy pairing of the two pools into witness entries. The
// caller guarantees capacity (that is what the theorems' inequalities say).
// ExhaustSources/ExhaustTargets consume one side completely and leave ∞
// leftovers on the other (the interleaving enumeration); Bijective consumes
// both sides, as the Browder construction requires.
WitnessMap pair_pools(Pool src, Pool dst, PairMode mode) {
  WitnessMap w;
  if (mode == PairMode::Bijective) {
    // finite groups feed the first infinite group of the other side when one
    // exists, otherwise match finite against finite
    Pool s_fin, d_fin;
    std::vector<int> s_inf, d_inf;
    for (auto& [g, cap] : src)
      cap.is_inf() ? (void)s_inf.push_back(g) : (void)s_fin.emplace_back(g, cap);
    for (auto& [g, cap] : dst)
      cap.is_inf() ? (void)d_inf.push_back(g) : (void)d_fin.emplace_back(g, cap);
    if (!d_inf.empty())
      for (auto& [g, cap] : s_fin) w.entries.push_back(make_entry(g, d_inf.front(), cap, PairingPolicy::Exact));
    if (!s_inf.empty())
      for (auto& [g, cap] : d_fin) w.entries.push_back(make_entry(s_inf.front(), g, cap, PairingPolicy::Exact));
    if (d_inf.empty() && s_inf.empty()) {
      // equal finite totals: plain greedy min-matching
      std::size_t si = 0, di = 0;
      while (si < s_fin.size() && di < d_fin.size()) {
        ExtNat take = min(s_fin[si].second, d_fin[di].second);
        if (!take.is_zero())
          w.entries.push_back(
              make_entry(s_fin[si].first, d_fin[di].first, take, PairingPolicy::Exact));
        s_fin[si].second = *s_fin[si].second.checked_sub(take);
        d_fin[di].second = *d_fin[di].second.checked_sub(take);
        if (s_fin[si].second.is_zero()) ++si;
        if (d_fin[di].second.is_zero()) ++di;
      }
      return w;
    }
    // ∞ against ∞: one-to-one up to the shorter list; the longer side's
    // remainder splits the final group of the other side. Equal totals mean
    // both lists are nonempty here.
    std::size_t m = std::min(s_inf.size(), d_inf.size());
    if (m == 0) return w;
    for (std::size_t i = 0; i + 1 < m; ++i)
      w.entries.push_back(
          make_entry(s_inf[i], d_inf[i], ext_inf(), PairingPolicy::ExhaustBoth));
    if (s_inf.size() > d_inf.size()) {
      for (std::size_t i = m - 1; i < s_inf.size(); ++i)
        w.entries.push_back(make_entry(
            s_inf[i], d_inf.back(), ext_inf(),
            i + 1 == s_inf.size() ? PairingPolicy::ExhaustBoth : PairingPolicy::ExhaustSrc));
    } else if (d_inf.size() > s_inf.size()) {
      for (std::size_t i = m - 1; i < d_inf.size(); ++i)
        w.entries.push_back(make_entry(
            s_inf.back(), d_inf[i], ext_inf(),
            i + 1 == d_inf.size() ? PairingPolicy::ExhaustBoth : PairingPolicy::ExhaustDst));
    } else if (m > 0) {
      w.entries.push_back(
          make_entry(s_inf[m - 1], d_inf[m - 1], ext_inf(), PairingPolicy::ExhaustBoth));
    }
    return w;
  }

  std::size_t si = 0, di = 0;
  while (si < src.size() && di < dst.size()) {
    auto& [sg, scap] = src[si];
    auto& [dg, dcap] = dst[di];
    if (scap.is_inf() && dcap.is_inf()) {
      if (mode == PairMode::ExhaustSources) {
        w.entries.push_back(make_entry(sg, dg, ext_inf(), PairingPolicy::ExhaustSrc));
        ++si;  // target keeps ∞ unpaired slots for later sources
      } else {
        w.entries.push_back(make_entry(sg, dg, ext_inf(), PairingPolicy::ExhaustDst));
        ++di;
      }
      continue;
    }
    ExtNat take = min(scap, dcap);
    if (!take.is_zero()) w.entries.push_back(make_entry(sg, dg, take, PairingPolicy::Exact));
    if (!scap.is_inf()) {
      scap = *scap.checked_sub(take);
      if (scap.is_zero()) ++si;
    }
    if (!dcap.is_inf()) {
      dcap = *dcap.checked_sub(take);
      if (dcap.is_zero()) ++di;
    }
  }
  return w;
}

struct Analysis {
  SigData a, b;
  FredholmClass ca, cb;
  BasisGraph ga, gb;
};

Analysis analyze(const ExprPtr& a, const ExprPtr& b) {
  Analysis out;
  out.ga = lower_to_graph(a);
  out.gb = lower_to_graph(b);
  out.a = sig_from_graph(out.ga);
  out.b = sig_from_graph(out.gb);
  out.ca = classify_signature(out.a.sig);
  out.cb = classify_signature(out.b.sig);
  return out;
}

bool target_reached(CompletionKind kind, const FredholmClass& c) {
  switch (kind) {
    case CompletionKind::LeftInvertible:
      return c.left_invertible;
    case CompletionKind::UpperBrowder:
      return c.upper_semi_browder;
    case CompletionKind::LowerBrowder:
      return c.lower_semi_browder;
    case CompletionKind::Browder:
      return c.browder;
  }
  return false;
}

WitnessMap build_witness(CompletionKind kind, const Analysis& an) {
  switch (kind) {
    case CompletionKind::LeftInvertible:
      // every kernel direction of B feeds a cokernel slot of the left
      // invertible A (which has forward rays only)
      return pair_pools(kernel_pool(an.gb, false), coker_pool(an.ga, true),
                        PairMode::ExhaustSources);
    case CompletionKind::UpperBrowder:
      if (an.cb.upper_semi_fredholm)
        return pair_pools(kernel_pool(an.gb, true), coker_pool(an.ga, true),
                          PairMode::ExhaustSources);
      // s_mul(A) = ∞: infinitely many forward rays absorb all of N(B)
      return pair_pools(kernel_pool(an.gb, false), coker_pool(an.ga, true),
                        PairMode::ExhaustSources);
    case CompletionKind::LowerBrowder:
      if (an.ca.lower_semi_fredholm)
        return pair_pools(kernel_pool(an.gb, true), coker_pool(an.ga, true),
                          PairMode::ExhaustTargets);
      // b.s_mul(B) = ∞: infinitely many backward rays absorb all of coker(A)
      return pair_pools(kernel_pool(an.gb, true), coker_pool(an.ga, false),
                        PairMode::ExhaustTargets);
    case CompletionKind::Browder:
      return pair_pools(kernel_pool(an.gb, true), coker_pool(an.ga, true),
                        PairMode::Bijective);
  }
  return {};
}

}  // namespace

CompletionVerdict decide_complete(CompletionKind kind, const ExprPtr& a, const ExprPtr& b) {
  Analysis an = analyze(a, b);
  CompletionVerdict v;
  switch (kind) {
    case CompletionKind::LeftInvertible: {
      if (!an.ca.left_invertible) {
        v.rule = "left-invertible completion";
        v.detail = "A is not left invertible";
        return v;
      }
      if (an.b.sig.range_closed) {
        v.rule = "left-invertible completion, closed-range branch";
        v.detail = "α(B) = " + an.b.sig.alpha.str() + " vs β(A) = " + an.a.sig.beta.str();
        if (!(an.b.sig.alpha <= an.a.sig.beta)) return v;
      } else {
        v.rule = "left-invertible completion, non-closed-range branch";
        v.detail = "β(A) = " + an.a.sig.beta.str();
        if (!an.a.sig.beta.is_inf()) return v;
      }
      break;
    }
    case CompletionKind::UpperBrowder: {
      if (!an.ca.upper_semi_browder) {
        v.rule = "upper semi-Browder completion";
        v.detail = "A is not upper semi-Browder";
        return v;
      }
      if (!an.cb.upper_semi_fredholm) {
        v.rule = "upper semi-Browder completion, B outside Φ₊";
        v.detail = "s_mul(A) = " + an.a.sig.smul.str();
        if (!an.a.sig.smul.is_inf()) return v;
      } else {
        v.rule = "upper semi-Browder completion, B in Φ₊";
        v.detail =
            "b.s_mul(B) = " + an.b.sig.bsmul.str() + " vs s_mul(A) = " + an.a.sig.smul.str();
        if (!(an.b.sig.bsmul <= an.a.sig.smul)) return v;
      }
      break;
    }
    case CompletionKind::LowerBrowder: {
      if (!an.cb.lower_semi_browder) {
        v.rule = "lower semi-Browder completion";
        v.detail = "B is not lower semi-Browder";
        return v;
      }
      if (!an.ca.lower_semi_fredholm) {
        v.rule = "lower semi-Browder completion, A outside Φ₋";
        v.detail = "b.s_mul(B) = " + an.b.sig.bsmul.str();
        if (!an.b.sig.bsmul.is_inf()) return v;
      } else {
        v.rule = "lower semi-Browder completion, A in Φ₋";
        v.detail =
            "b.s_mul(B) = " + an.b.sig.bsmul.str() + " vs s_mul(A) = " + an.a.sig.smul.str();
        if (!(an.b.sig.bsmul >= an.a.sig.smul)) return v;
      }
      break;
    }
    case CompletionKind::Browder: {
      v.rule = "Browder completion";
      if (!an.ca.upper_semi_browder) {
        v.detail = "A is not upper semi-Browder";
        return v;
      }
      if (!an.cb.lower_semi_browder) {
        v.detail = "B is not lower semi-Browder";
        return v;
      }
      v.detail =
          "b.s_mul(B) = " + an.b.sig.bsmul.str() + " vs s_mul(A) = " + an.a.sig.smul.str();
      if (!(an.b.sig.bsmul == an.a.sig.smul)) return v;
      break;
    }
  }

  v.possible = true;
  WitnessMap w = build_witness(kind, an);
  ExprPtr assembled = assemble_block(a, w, b);
  // Soundness: re-classify the assembled operator through the chain census,
  // independently of the decision predicate.
  FredholmClass cls = classify_signature(sig_from_graph(lower_to_graph(assembled)));
  if (!target_reached(kind, cls))
    fail(ErrorKind::Internal, "constructed witness misses the target class");
  v.witness = std::move(w);
  v.assembled = std::move(assembled);
  return v;
}

std::pair<WitnessMap, ExprPtr> construct_witness(CompletionKind kind, const ExprPtr& a,
                                                 const ExprPtr& b) {
  CompletionVerdict v = decide_complete(kind, a, b);
  if (!v.possible)
    fail(ErrorKind::Infeasible, "no corner reaches the target class: " + v.str());
  return {*v.witness, v.assembled};
}

}  // namespace samop
