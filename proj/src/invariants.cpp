#include "samop/invariants.hpp"

#include <algorithm>

#include "samop/errors.hpp"
#include "samop/tables.hpp"

namespace samop {

GrowthSeq alpha_growth(const ChainCensus& c) {
  long long k0 = 0;
  for (const auto& [len, cnt] : c.finite_chains)
    if (!cnt.is_zero()) k0 = std::max(k0, len);
  GrowthSeq s;
  ExtNat chain_total(0);
  for (const auto& [len, cnt] : c.finite_chains)
    chain_total += cnt * ExtNat(static_cast<std::uint64_t>(len));
  for (long long k = 1; k <= k0; ++k) {
    ExtNat v = c.backward_rays * ExtNat(static_cast<std::uint64_t>(k));
    for (const auto& [len, cnt] : c.finite_chains)
      v += cnt * ExtNat(static_cast<std::uint64_t>(std::min(k, len)));
    s.prefix.push_back(v);
  }
  s.slope = c.backward_rays;
  s.intercept = chain_total;
  return s.normalized();
}

GrowthSeq beta_growth(const ChainCensus& c) {
  ChainCensus mirrored = c;
  std::swap(mirrored.forward_rays, mirrored.backward_rays);
  GrowthSeq s = alpha_growth(mirrored);
  std::swap(mirrored.forward_rays, mirrored.backward_rays);
  return s;
}

SigData sig_from_graph(const BasisGraph& g) {
  ChainCensus c = chain_census(g);
  SigData d;
  d.alpha_seq = alpha_growth(c);
  d.beta_seq = beta_growth(c);
  d.sig.alpha = d.alpha_seq.eval(1);
  d.sig.beta = d.beta_seq.eval(1);
  d.sig.range_closed = true;  // finite weight alphabet, no accumulation at 0
  long long maxlen = 0;
  for (const auto& [len, cnt] : c.finite_chains)
    if (!cnt.is_zero()) maxlen = std::max(maxlen, len);
  d.sig.asc = !c.backward_rays.is_zero() ? ext_inf()
                                         : ExtNat(static_cast<std::uint64_t>(maxlen));
  d.sig.des = !c.forward_rays.is_zero() ? ext_inf()
                                        : ExtNat(static_cast<std::uint64_t>(maxlen));
  d.sig.smul = growth_slope(d.beta_seq);
  d.sig.bsmul = growth_slope(d.alpha_seq);
  return d;
}

namespace {

// Compare |μ|² against |c|²: the position of λ = 0 relative to the atom's
// circle, since μ + c·U = c(U − z₀) with z₀ = −μ/c.
enum class CirclePos { Inside, On, Outside };

CirclePos zero_position(const GaussianRational& c, const GaussianRational& mu) {
  mpq_class d = mu.norm2();
  mpq_class r = c.norm2();
  if (d < r) return CirclePos::Inside;
  if (d == r) return CirclePos::On;
  return CirclePos::Outside;
}

SigData eval0_rec(const ExprPtr& e);

SigData eval0_power(const ExprPtr& base, long long m) {
  const Expr::Node& n = base->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) {
    switch (zero_position(s->c, s->mu)) {
      case CirclePos::Inside:
        return row_forward_rays(ExtNat(static_cast<std::uint64_t>(m)));
      case CirclePos::On:
        return row_boundary_not_closed();
      case CirclePos::Outside:
        return sig_invertible();
    }
  }
  if (const auto* s = std::get_if<BackShiftNode>(&n)) {
    switch (zero_position(s->c, s->mu)) {
      case CirclePos::Inside:
        return row_backward_rays(ExtNat(static_cast<std::uint64_t>(m)));
      case CirclePos::On:
        return row_boundary_not_closed();
      case CirclePos::Outside:
        return sig_invertible();
    }
  }
  if (const auto* s = std::get_if<BilateralNode>(&n))
    return zero_position(s->c, s->mu) == CirclePos::On ? row_boundary_not_closed()
                                                       : sig_invertible();
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_point_row(dense_pow(t->m, m), GaussianRational(0));
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    std::vector<ExprPtr> parts;
    for (const ExprPtr& p : ds->parts) parts.push_back(power(p, m));
    return eval0_rec(direct_sum(std::move(parts)));
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return sig_amplify(eval0_power(a->inner, m));
  if (const auto* p = std::get_if<PowerNode>(&n)) return eval0_power(p->inner, m * p->k);
  fail(ErrorKind::NotGraphExpressible,
       "power of this expression has no exact λ = 0 evaluation");
}

SigData eval0_rec(const ExprPtr& e) {
  if (graph_expressible(e)) return sig_from_graph(lower_to_graph(e));
  const Expr::Node& n = e->node();
  if (e->is<ShiftNode>() || e->is<BackShiftNode>() || e->is<BilateralNode>())
    return eval0_power(e, 1);
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_point_row(t->m, GaussianRational(0));
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    SigData acc = eval0_rec(ds->parts.front());
    for (std::size_t i = 1; i < ds->parts.size(); ++i)
      acc = sig_add(acc, eval0_rec(ds->parts[i]));
    return acc;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) return sig_amplify(eval0_rec(a->inner));
  if (const auto* p = std::get_if<PowerNode>(&n)) return eval0_power(p->inner, p->k);
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    if (t->witness.empty())
      return sig_add(eval0_rec(t->a), eval0_rec(t->b));
    fail(ErrorKind::NotGraphExpressible,
         "tri-block with witness requires graph-expressible corners");
  }
  fail(ErrorKind::NotGraphExpressible, "no λ = 0 evaluation for this expression");
}

}  // namespace

SigData eval_at_zero(const ExprPtr& e) { return eval0_rec(normalize_adjoints(e)); }

std::pair<GrowthSeq, GrowthSeq> kernel_growth(const ExprPtr& e) {
  SigData d = eval_at_zero(e);
  return {d.alpha_seq, d.beta_seq};
}

FredholmSignature signature(const ExprPtr& e) { return eval_at_zero(e).sig; }

std::pair<ExtNat, ExtNat> samuel_multiplicities(const ExprPtr& e) {
  FredholmSignature s = signature(e);
  return {s.smul, s.bsmul};
}

FredholmClass classify(const ExprPtr& e) { return classify_signature(signature(e)); }

// ---------------------------------------------------------------------------
// Census summaries for the decomposition operations. Graph-expressible
// expressions use the genuine census; translated shift atoms map to the
// invariant-equivalent slack ({fwd}/{bwd} inside, invertible outside).
// ---------------------------------------------------------------------------

namespace {

ChainCensus census_summary_rec(const ExprPtr& e);

// Jordan structure of a finite matrix at eigenvalue 0, read off the α-chain.
// Invertible directions are omitted, matching the loop convention.
ChainCensus trimatrix_census_at_zero(const DenseMat& m) {
  SigData d = trimatrix_point_row(m, GaussianRational(0));
  const long long n = m.rows();
  std::vector<long long> a(static_cast<std::size_t>(n) + 2, 0);
  for (long long k = 1; k <= n + 1; ++k)
    a[static_cast<std::size_t>(k)] =
        static_cast<long long>(d.alpha_seq.eval(static_cast<std::uint64_t>(k)).finite());
  ChainCensus out;
  for (long long s = 1; s <= n; ++s) {
    long long geq_s = a[s] - a[s - 1];
    long long geq_s1 = a[s + 1] - a[s];
    if (geq_s - geq_s1 > 0)
      out.finite_chains[s] += ExtNat(static_cast<std::uint64_t>(geq_s - geq_s1));
  }
  return out;
}

ChainCensus census_power_summary(const ExprPtr& base, long long m) {
  ChainCensus out;
  const Expr::Node& n = base->node();
  auto ray_summary = [&](CirclePos pos, bool forward) {
    switch (pos) {
      case CirclePos::Inside:
        if (forward)
          out.forward_rays += ExtNat(static_cast<std::uint64_t>(m));
        else
          out.backward_rays += ExtNat(static_cast<std::uint64_t>(m));
        break;
      case CirclePos::Outside:
        out.bi_infinite += ExtNat(1);  // invertible slack
        break;
      case CirclePos::On:
        fail(ErrorKind::NotSemiFredholm,
             "operator is not semi-Fredholm (range not closed)");
    }
  };
  if (const auto* s = std::get_if<ShiftNode>(&n)) {
    ray_summary(zero_position(s->c, s->mu), true);
    return out;
  }
  if (const auto* s = std::get_if<BackShiftNode>(&n)) {
    ray_summary(zero_position(s->c, s->mu), false);
    return out;
  }
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    if (zero_position(s->c, s->mu) == CirclePos::On)
      fail(ErrorKind::NotSemiFredholm, "operator is not semi-Fredholm");
    out.bi_infinite += ExtNat(1);
    return out;
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_census_at_zero(dense_pow(t->m, m));
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    for (const ExprPtr& p : ds->parts) out.add(census_summary_rec(power(p, m)));
    return out;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return census_power_summary(a->inner, m).amplified();
  if (const auto* p = std::get_if<PowerNode>(&n))
    return census_power_summary(p->inner, m * p->k);
  fail(ErrorKind::NotGraphExpressible, "no census summary for this expression");
}

ChainCensus census_summary_rec(const ExprPtr& e) {
  if (graph_expressible(e)) return chain_census(e);
  const Expr::Node& n = e->node();
  if (e->is<ShiftNode>() || e->is<BackShiftNode>() || e->is<BilateralNode>())
    return census_power_summary(e, 1);
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_census_at_zero(t->m);
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    ChainCensus out;
    for (const ExprPtr& p : ds->parts) out.add(census_summary_rec(p));
    return out;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return census_summary_rec(a->inner).amplified();
  if (const auto* p = std::get_if<PowerNode>(&n))
    return census_power_summary(p->inner, p->k);
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    if (t->witness.empty()) {
      ChainCensus out = census_summary_rec(t->a);
      out.add(census_summary_rec(t->b));
      return out;
    }
  }
  fail(ErrorKind::NotGraphExpressible, "no census summary for this expression");
}

ChainCensus census_summary(const ExprPtr& e) {
  return census_summary_rec(normalize_adjoints(e));
}

long long finite_dim(const ChainCensus& c) {
  long long total = 0;
  for (const auto& [len, cnt] : c.finite_chains) {
    if (cnt.is_inf())
      fail(ErrorKind::Internal, "finite-chain part is infinite dimensional");
    total += len * static_cast<long long>(cnt.finite());
  }
  return total;
}

}  // namespace

NormalForm3 normal_form(const ExprPtr& e) {
  SigData d = eval_at_zero(e);
  if (!classify_signature(d.sig).semi_fredholm)
    fail(ErrorKind::NotSemiFredholm, "normal form requires a semi-Fredholm operator");
  ChainCensus c = census_summary(e);

  NormalForm3 nf;
  nf.t1.backward_rays = c.backward_rays;
  nf.t1.bi_infinite = c.bi_infinite;
  nf.t2.forward_rays = c.forward_rays;
  nf.t3.finite_chains = c.finite_chains;
  nf.h3_dim = finite_dim(nf.t3);
  nf.ind_t1 = c.backward_rays;
  nf.neg_ind_t2 = c.forward_rays;
  if (nf.ind_t1 != d.sig.bsmul || nf.neg_ind_t2 != d.sig.smul)
    fail(ErrorKind::Internal, "normal form indices disagree with multiplicities");
  if (nf.ind_t1.is_inf() && nf.neg_ind_t2.is_inf())
    fail(ErrorKind::Internal, "normal form violates the min-index condition");
  return nf;
}

UpperBrowderDecomp decompose_upper_browder(const ExprPtr& e) {
  SigData d = eval_at_zero(e);
  if (!classify_signature(d.sig).upper_semi_browder)
    fail(ErrorKind::NotUpperSemiBrowder, "operator is not upper semi-Browder");
  ChainCensus c = census_summary(e);
  UpperBrowderDecomp out;
  out.nilpotent_part.finite_chains = c.finite_chains;
  out.h1_dim = finite_dim(out.nilpotent_part);
  out.left_inv_part.forward_rays = c.forward_rays;
  out.left_inv_part.bi_infinite = c.bi_infinite;
  out.beta_t2 = c.forward_rays;
  if (out.beta_t2 != d.sig.smul)
    fail(ErrorKind::Internal, "β(T₂) disagrees with s_mul");
  return out;
}

LowerBrowderDecomp decompose_lower_browder(const ExprPtr& e) {
  SigData d = eval_at_zero(e);
  if (!classify_signature(d.sig).lower_semi_browder)
    fail(ErrorKind::NotLowerSemiBrowder, "operator is not lower semi-Browder");
  ChainCensus c = census_summary(e);
  LowerBrowderDecomp out;
  out.nilpotent_part.finite_chains = c.finite_chains;
  out.h2_dim = finite_dim(out.nilpotent_part);
  out.right_inv_part.backward_rays = c.backward_rays;
  out.right_inv_part.bi_infinite = c.bi_infinite;
  out.alpha_t1 = c.backward_rays;
  if (out.alpha_t1 != d.sig.bsmul)
    fail(ErrorKind::Internal, "α(T₁) disagrees with b.s_mul");
  return out;
}

}  // namespace samop
