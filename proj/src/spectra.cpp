#include "samop/spectra.hpp"

#include <algorithm>
#include <map>

#include "samop/errors.hpp"
#include "samop/graph.hpp"
#include "samop/invariants.hpp"
#include "samop/tables.hpp"

namespace samop {

const char* kind_token(SpectrumKind k) {
  switch (k) {
    case SpectrumKind::Sigma:
      return "sigma";
    case SpectrumKind::Left:
      return "l";
    case SpectrumKind::Right:
      return "r";
    case SpectrumKind::Essential:
      return "e";
    case SpectrumKind::SFPlus:
      return "sf_plus";
    case SpectrumKind::SFMinus:
      return "sf_minus";
    case SpectrumKind::Browder:
      return "b";
    case SpectrumKind::UpperBrowder:
      return "ab";
    case SpectrumKind::LowerBrowder:
      return "sb";
  }
  return "?";
}

std::optional<SpectrumKind> kind_from_token(const std::string& token) {
  static const std::map<std::string, SpectrumKind> m = {
      {"sigma", SpectrumKind::Sigma},      {"l", SpectrumKind::Left},
      {"r", SpectrumKind::Right},          {"e", SpectrumKind::Essential},
      {"sf_plus", SpectrumKind::SFPlus},   {"sf+", SpectrumKind::SFPlus},
      {"sf_minus", SpectrumKind::SFMinus}, {"sf-", SpectrumKind::SFMinus},
      {"b", SpectrumKind::Browder},        {"ab", SpectrumKind::UpperBrowder},
      {"sb", SpectrumKind::LowerBrowder}};
  auto it = m.find(token);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

bool kind_fails(SpectrumKind kind, const FredholmSignature& sig) {
  FredholmClass c = classify_signature(sig);
  switch (kind) {
    case SpectrumKind::Sigma:
      return !c.invertible;
    case SpectrumKind::Left:
      return !c.left_invertible;
    case SpectrumKind::Right:
      return !c.right_invertible;
    case SpectrumKind::Essential:
      return !c.fredholm;
    case SpectrumKind::SFPlus:
      return !c.upper_semi_fredholm;
    case SpectrumKind::SFMinus:
      return !c.lower_semi_fredholm;
    case SpectrumKind::Browder:
      return !c.browder;
    case SpectrumKind::UpperBrowder:
      return !c.upper_semi_browder;
    case SpectrumKind::LowerBrowder:
      return !c.lower_semi_browder;
  }
  return true;
}

// ---------------------------------------------------------------------------
// signature_at
// ---------------------------------------------------------------------------

namespace {

enum class Pos { Inside, On, Outside };

Pos position(const GaussianRational& lambda, const GaussianRational& center,
             const mpq_class& r2) {
  mpq_class d = (lambda - center).norm2();
  int c = cmp(d, r2);
  if (c < 0) return Pos::Inside;
  if (c == 0) return Pos::On;
  return Pos::Outside;
}

void require_no_witness_chains(const BasisGraph& g) {
  for (const ChainGroup& grp : g.groups)
    if (grp.witness_merged && !grp.count.is_zero())
      fail(ErrorKind::UnsupportedForLambda,
           "λ ≠ 0 signatures of assembled tri-blocks are out of scope");
}

// Signature of (graph operator) − λ, one analytic row per chain group.
SigData eval_graph_at(const BasisGraph& g, const GaussianRational& lambda) {
  if (!lambda.is_zero()) require_no_witness_chains(g);
  SigData acc = sig_invertible();
  for (const ChainGroup& grp : g.groups) {
    if (grp.count.is_zero()) continue;
    SigData row = sig_invertible();
    switch (grp.kind) {
      case ChainKind::ForwardRay:
        switch (position(lambda, GaussianRational(0), grp.tail.norm2())) {
          case Pos::Inside:
            row = row_forward_rays(grp.count);
            break;
          case Pos::On:
            row = row_boundary_not_closed();
            break;
          case Pos::Outside:
            break;
        }
        break;
      case ChainKind::BackwardRay:
        switch (position(lambda, GaussianRational(0), grp.tail.norm2())) {
          case Pos::Inside:
            row = row_backward_rays(grp.count);
            break;
          case Pos::On:
            row = row_boundary_not_closed();
            break;
          case Pos::Outside:
            break;
        }
        break;
      case ChainKind::BiInfinite:
        if (position(lambda, GaussianRational(0), grp.tail.norm2()) == Pos::On)
          row = row_boundary_not_closed();
        break;
      case ChainKind::Loop:
        if (lambda == grp.tail) row = row_eigen_point(grp.count);
        break;
      case ChainKind::FiniteChain:
        if (lambda.is_zero()) row = row_finite_chains(grp.len, grp.count);
        break;
    }
    acc = sig_add(acc, row);
  }
  return acc;
}

SigData at_rec(const ExprPtr& e, const GaussianRational& lambda);

SigData at_power(const ExprPtr& base, long long m, const GaussianRational& lambda) {
  const Expr::Node& n = base->node();
  auto shift_like_row = [&](const GaussianRational& c, const GaussianRational& mu,
                            bool forward) -> SigData {
    if (mu.is_zero()) {
      // (c·U)^m is m copies of the c^m-weighted shift
      switch (position(lambda, GaussianRational(0), c.pow(m).norm2())) {
        case Pos::Inside:
          return forward ? row_forward_rays(ExtNat(static_cast<std::uint64_t>(m)))
                         : row_backward_rays(ExtNat(static_cast<std::uint64_t>(m)));
        case Pos::On:
          return row_boundary_not_closed();
        case Pos::Outside:
          return sig_invertible();
      }
    }
    if (!lambda.is_zero())
      fail(ErrorKind::UnsupportedForLambda,
           "λ ≠ 0 signatures of powers of translated shifts need irrational roots");
    // (μ + cU)^m at 0: the only root of (μ + cz)^m is −μ/c with multiplicity m
    switch (position(GaussianRational(0), mu, c.norm2())) {
      case Pos::Inside:
        return forward ? row_forward_rays(ExtNat(static_cast<std::uint64_t>(m)))
                       : row_backward_rays(ExtNat(static_cast<std::uint64_t>(m)));
      case Pos::On:
        return row_boundary_not_closed();
      case Pos::Outside:
        return sig_invertible();
    }
    return sig_invertible();
  };
  if (const auto* s = std::get_if<ShiftNode>(&n)) return shift_like_row(s->c, s->mu, true);
  if (const auto* s = std::get_if<BackShiftNode>(&n))
    return shift_like_row(s->c, s->mu, false);
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    if (s->mu.is_zero())
      return position(lambda, GaussianRational(0), s->c.pow(m).norm2()) == Pos::On
                 ? row_boundary_not_closed()
                 : sig_invertible();
    if (!lambda.is_zero())
      fail(ErrorKind::UnsupportedForLambda,
           "λ ≠ 0 signatures of powers of translated shifts need irrational roots");
    return position(GaussianRational(0), s->mu, s->c.norm2()) == Pos::On
               ? row_boundary_not_closed()
               : sig_invertible();
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_point_row(dense_pow(t->m, m), lambda);
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    SigData acc = sig_invertible();
    for (const ExprPtr& p : ds->parts) acc = sig_add(acc, at_rec(power(p, m), lambda));
    return acc;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return sig_amplify(at_power(a->inner, m, lambda));
  if (const auto* p = std::get_if<PowerNode>(&n)) return at_power(p->inner, m * p->k, lambda);
  fail(ErrorKind::UnsupportedForLambda, "no exact λ-signature for this power");
}

SigData at_rec(const ExprPtr& e, const GaussianRational& lambda) {
  if (graph_expressible(e)) return eval_graph_at(lower_to_graph(e), lambda);
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) {
    switch (position(lambda, s->mu, s->c.norm2())) {
      case Pos::Inside:
        return row_forward_rays(ExtNat(1));
      case Pos::On:
        return row_boundary_not_closed();
      case Pos::Outside:
        return sig_invertible();
    }
  }
  if (const auto* s = std::get_if<BackShiftNode>(&n)) {
    switch (position(lambda, s->mu, s->c.norm2())) {
      case Pos::Inside:
        return row_backward_rays(ExtNat(1));
      case Pos::On:
        return row_boundary_not_closed();
      case Pos::Outside:
        return sig_invertible();
    }
  }
  if (const auto* s = std::get_if<BilateralNode>(&n))
    return position(lambda, s->mu, s->c.norm2()) == Pos::On ? row_boundary_not_closed()
                                                            : sig_invertible();
  if (const auto* t = std::get_if<TriMatrixNode>(&n))
    return trimatrix_point_row(t->m, lambda);
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    SigData acc = sig_invertible();
    for (const ExprPtr& p : ds->parts) acc = sig_add(acc, at_rec(p, lambda));
    return acc;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return sig_amplify(at_rec(a->inner, lambda));
  if (const auto* p = std::get_if<PowerNode>(&n)) return at_power(p->inner, p->k, lambda);
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    if (t->witness.empty())
      return sig_add(at_rec(t->a, lambda), at_rec(t->b, lambda));
    fail(ErrorKind::UnsupportedForLambda,
         "tri-block witness requires graph-expressible corners");
  }
  fail(ErrorKind::UnsupportedForLambda, "no exact λ-signature for this expression");
}

}  // namespace

SigData signature_at(const ExprPtr& e, const GaussianRational& lambda) {
  return at_rec(normalize_adjoints(e), lambda);
}

// ---------------------------------------------------------------------------
// piecewise signatures
// ---------------------------------------------------------------------------

namespace {

struct CellLayout {
  std::optional<GaussianRational> center;  // of the shift family, if any
  std::vector<mpq_class> radii;            // squared radii
  std::vector<GaussianRational> points;    // eigen-points and loop values
};

void add_radius(CellLayout& lay, const GaussianRational& center, const mpq_class& r2) {
  if (lay.center && !(*lay.center == center))
    fail(ErrorKind::UnsupportedForLambda,
         "piecewise signature requires concentric shift atoms");
  lay.center = center;
  lay.radii.push_back(r2);
}

void collect_layout(const ExprPtr& e, CellLayout& lay) {
  if (graph_expressible(e)) {
    BasisGraph g = lower_to_graph(e);
    require_no_witness_chains(g);
    for (const ChainGroup& grp : g.groups) {
      if (grp.count.is_zero()) continue;
      switch (grp.kind) {
        case ChainKind::ForwardRay:
        case ChainKind::BackwardRay:
        case ChainKind::BiInfinite:
          add_radius(lay, GaussianRational(0), grp.tail.norm2());
          break;
        case ChainKind::Loop:
          lay.points.push_back(grp.tail);
          break;
        case ChainKind::FiniteChain:
          lay.points.push_back(GaussianRational(0));
          break;
      }
    }
    return;
  }
  const Expr::Node& n = e->node();
  if (const auto* s = std::get_if<ShiftNode>(&n)) {
    add_radius(lay, s->mu, s->c.norm2());
    return;
  }
  if (const auto* s = std::get_if<BackShiftNode>(&n)) {
    add_radius(lay, s->mu, s->c.norm2());
    return;
  }
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    add_radius(lay, s->mu, s->c.norm2());
    return;
  }
  if (const auto* t = std::get_if<TriMatrixNode>(&n)) {
    for (long i = 0; i < t->m.rows(); ++i) lay.points.push_back(t->m(i, i));
    return;
  }
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    for (const ExprPtr& p : ds->parts) collect_layout(p, lay);
    return;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) {
    collect_layout(a->inner, lay);
    return;
  }
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    if (const auto* t = std::get_if<TriMatrixNode>(&p->inner->node())) {
      DenseMat mp = dense_pow(t->m, p->k);
      for (long i = 0; i < mp.rows(); ++i) lay.points.push_back(mp(i, i));
      return;
    }
    fail(ErrorKind::UnsupportedForLambda,
         "powers of translated shifts have no rational cell structure");
  }
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    if (t->witness.empty()) {
      collect_layout(t->a, lay);
      collect_layout(t->b, lay);
      return;
    }
  }
  fail(ErrorKind::UnsupportedForLambda, "no cell layout for this expression");
}

// Signature on the generic part of the circle |λ − center|² = x (all special
// points peeled off by earlier parts of the piecewise list).
SigData radial_rec(const ExprPtr& e, const GaussianRational& center, const mpq_class& x);

SigData radial_graph(const BasisGraph& g, const mpq_class& x) {
  SigData acc = sig_invertible();
  for (const ChainGroup& grp : g.groups) {
    if (grp.count.is_zero()) continue;
    SigData row = sig_invertible();
    int c = cmp(x, grp.tail.norm2());
    switch (grp.kind) {
      case ChainKind::ForwardRay:
        if (c < 0)
          row = row_forward_rays(grp.count);
        else if (c == 0)
          row = row_boundary_not_closed();
        break;
      case ChainKind::BackwardRay:
        if (c < 0)
          row = row_backward_rays(grp.count);
        else if (c == 0)
          row = row_boundary_not_closed();
        break;
      case ChainKind::BiInfinite:
        if (c == 0) row = row_boundary_not_closed();
        break;
      case ChainKind::Loop:
      case ChainKind::FiniteChain:
        break;  // point spectra only; generic circle points are invertible
    }
    acc = sig_add(acc, row);
  }
  return acc;
}

SigData radial_rec(const ExprPtr& e, const GaussianRational& center, const mpq_class& x) {
  if (graph_expressible(e)) return radial_graph(lower_to_graph(e), x);
  const Expr::Node& n = e->node();
  auto ray_row = [&](const GaussianRational& c, const GaussianRational& mu,
                     bool forward) -> SigData {
    if (!(mu == center))
      fail(ErrorKind::Internal, "radial evaluation against the wrong center");
    int cc = cmp(x, c.norm2());
    if (cc < 0)
      return forward ? row_forward_rays(ExtNat(1)) : row_backward_rays(ExtNat(1));
    if (cc == 0) return row_boundary_not_closed();
    return sig_invertible();
  };
  if (const auto* s = std::get_if<ShiftNode>(&n)) return ray_row(s->c, s->mu, true);
  if (const auto* s = std::get_if<BackShiftNode>(&n)) return ray_row(s->c, s->mu, false);
  if (const auto* s = std::get_if<BilateralNode>(&n)) {
    if (!(s->mu == center))
      fail(ErrorKind::Internal, "radial evaluation against the wrong center");
    return cmp(x, s->c.norm2()) == 0 ? row_boundary_not_closed() : sig_invertible();
  }
  if (e->is<TriMatrixNode>()) return sig_invertible();
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    SigData acc = sig_invertible();
    for (const ExprPtr& p : ds->parts) acc = sig_add(acc, radial_rec(p, center, x));
    return acc;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n))
    return sig_amplify(radial_rec(a->inner, center, x));
  if (const auto* p = std::get_if<PowerNode>(&n)) {
    if (p->inner->is<TriMatrixNode>()) return sig_invertible();
    fail(ErrorKind::UnsupportedForLambda, "no radial signature for this power");
  }
  if (const auto* t = std::get_if<TriBlockNode>(&n)) {
    if (t->witness.empty())
      return sig_add(radial_rec(t->a, center, x), radial_rec(t->b, center, x));
  }
  fail(ErrorKind::UnsupportedForLambda, "no radial signature for this expression");
}

}  // namespace

const SigData& PiecewiseSignature::at(const GaussianRational& lambda) const {
  for (const PiecewisePart& p : parts)
    if (member(lambda, p.cell)) return p.data;
  fail(ErrorKind::Internal, "piecewise signature does not cover λ");
}

PiecewiseSignature piecewise_signature(const ExprPtr& expr) {
  ExprPtr e = normalize_adjoints(expr);
  CellLayout lay;
  collect_layout(e, lay);
  GaussianRational center = lay.center.value_or(GaussianRational(0));

  std::sort(lay.radii.begin(), lay.radii.end(),
            [](const mpq_class& a, const mpq_class& b) { return cmp(a, b) < 0; });
  lay.radii.erase(std::unique(lay.radii.begin(), lay.radii.end()), lay.radii.end());

  // Special points first: eigen-points, loop values, and the family center
  // (the annulus cells exclude their center).
  std::vector<GaussianRational> pts = lay.points;
  pts.push_back(center);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  PiecewiseSignature out;
  for (const GaussianRational& p : pts)
    out.parts.push_back({RegionCell::point(p), signature_at(e, p)});
  for (const mpq_class& r : lay.radii)
    out.parts.push_back({RegionCell::circle(center, r), radial_rec(e, center, r)});
  for (std::size_t i = 0; i <= lay.radii.size(); ++i) {
    mpq_class lo = i == 0 ? mpq_class(0) : lay.radii[i - 1];
    if (i < lay.radii.size()) {
      mpq_class mid = (lo + lay.radii[i]) / 2;
      out.parts.push_back(
          {RegionCell::annulus(center, lo, lay.radii[i]), radial_rec(e, center, mid)});
    } else {
      out.parts.push_back(
          {RegionCell::annulus_unbounded(center, lo), radial_rec(e, center, lo + 1)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// spectra
// ---------------------------------------------------------------------------

namespace {

Region spectrum_rec(const ExprPtr& e, SpectrumKind kind) {
  const Expr::Node& n = e->node();
  if (const auto* ds = std::get_if<DirectSumNode>(&n)) {
    // every class here tests componentwise on direct sums
    Region acc;
    for (const ExprPtr& p : ds->parts) acc = region_union(acc, spectrum_rec(p, kind));
    return acc;
  }
  if (const auto* a = std::get_if<AmplifyNode>(&n)) {
    if (const auto* ds = std::get_if<DirectSumNode>(&a->inner->node())) {
      Region acc;
      for (const ExprPtr& p : ds->parts)
        acc = region_union(acc, spectrum_rec(amplify(p), kind));
      return acc;
    }
    if (const auto* aa = std::get_if<AmplifyNode>(&a->inner->node()))
      return spectrum_rec(amplify(aa->inner), kind);
  }
  PiecewiseSignature ps = piecewise_signature(e);
  std::vector<RegionCell> bad;
  for (const PiecewisePart& p : ps.parts)
    if (kind_fails(kind, p.data.sig)) bad.push_back(p.cell);
  return Region(std::move(bad));
}

}  // namespace

Region spectrum(const ExprPtr& e, SpectrumKind kind) {
  return spectrum_rec(normalize_adjoints(e), kind);
}

// ---------------------------------------------------------------------------
// completion spectra
// ---------------------------------------------------------------------------

const char* meet_token(MeetKind k) {
  switch (k) {
    case MeetKind::Sigma:
      return "sigma";
    case MeetKind::UpperBrowder:
      return "ab";
    case MeetKind::LowerBrowder:
      return "sb";
    case MeetKind::Browder:
      return "b";
  }
  return "?";
}

std::optional<MeetKind> meet_from_token(const std::string& token) {
  if (token == "sigma") return MeetKind::Sigma;
  if (token == "ab") return MeetKind::UpperBrowder;
  if (token == "sb") return MeetKind::LowerBrowder;
  if (token == "b") return MeetKind::Browder;
  return std::nullopt;
}

namespace {

bool meet_predicate(MeetKind kind, const FredholmSignature& sa,
                    const FredholmSignature& sb) {
  FredholmClass ca = classify_signature(sa);
  FredholmClass cb = classify_signature(sb);
  switch (kind) {
    case MeetKind::Sigma:
      return !ca.left_invertible || !cb.right_invertible || !(sb.alpha == sa.beta);
    case MeetKind::UpperBrowder:
      if (!ca.upper_semi_browder) return true;
      if (!cb.upper_semi_fredholm && !sa.smul.is_inf()) return true;
      return ca.fredholm && cb.upper_semi_fredholm && sb.bsmul > sa.smul;
    case MeetKind::LowerBrowder:
      if (!cb.lower_semi_browder) return true;
      if (!ca.lower_semi_fredholm && !sb.bsmul.is_inf()) return true;
      return cb.fredholm && ca.lower_semi_fredholm && sb.bsmul < sa.smul;
    case MeetKind::Browder:
      if (!ca.upper_semi_browder || !cb.lower_semi_browder) return true;
      return !(sb.bsmul == sa.smul);
  }
  return true;
}

}  // namespace

bool completion_member(MeetKind kind, const ExprPtr& a, const ExprPtr& b,
                       const GaussianRational& lambda) {
  return meet_predicate(kind, signature_at(a, lambda).sig, signature_at(b, lambda).sig);
}

bool completion_member_dimension_form(const ExprPtr& a, const ExprPtr& b,
                                      const GaussianRational& lambda) {
  FredholmSignature sa = signature_at(a, lambda).sig;
  FredholmSignature sb = signature_at(b, lambda).sig;
  FredholmClass ca = classify_signature(sa);
  FredholmClass cb = classify_signature(sb);
  if (!ca.upper_semi_browder || !cb.lower_semi_browder) return true;
  return !(sa.alpha + sb.alpha == sa.beta + sb.beta);
}

Region completion_spectrum(MeetKind kind, const ExprPtr& a, const ExprPtr& b) {
  PiecewiseSignature pa = piecewise_signature(a);
  PiecewiseSignature pb = piecewise_signature(b);

  // A cell of one side whose predicate holds against every cell of the other
  // side enters whole, with no intersection needed (the pairs cover it).
  std::vector<RegionCell> cells;
  std::vector<bool> a_full(pa.parts.size(), false), b_full(pb.parts.size(), false);
  for (std::size_t i = 0; i < pa.parts.size(); ++i) {
    bool all = true;
    for (const PiecewisePart& q : pb.parts)
      if (!meet_predicate(kind, pa.parts[i].data.sig, q.data.sig)) {
        all = false;
        break;
      }
    if (all) {
      a_full[i] = true;
      cells.push_back(pa.parts[i].cell);
    }
  }
  for (std::size_t j = 0; j < pb.parts.size(); ++j) {
    bool all = true;
    for (const PiecewisePart& p : pa.parts)
      if (!meet_predicate(kind, p.data.sig, pb.parts[j].data.sig)) {
        all = false;
        break;
      }
    if (all) {
      b_full[j] = true;
      cells.push_back(pb.parts[j].cell);
    }
  }
  for (std::size_t i = 0; i < pa.parts.size(); ++i) {
    if (a_full[i]) continue;
    for (std::size_t j = 0; j < pb.parts.size(); ++j) {
      if (b_full[j]) continue;
      if (!meet_predicate(kind, pa.parts[i].data.sig, pb.parts[j].data.sig)) continue;
      // Point pieces are decided by the exact pointwise pass below: a raw
      // cell intersection ignores the first-match peeling at special points.
      for (RegionCell& piece : intersect_cells(pa.parts[i].cell, pb.parts[j].cell))
        if (piece.kind != RegionCell::Kind::Point) cells.push_back(std::move(piece));
    }
  }
  Region region(std::move(cells));

  // First-match correction: the pair machinery intersected raw cells, but at
  // a special point the signature is governed by that point's own part.
  // Points are re-checked exactly; a false point buried inside an included
  // open cell cannot be carved out of the family, so it is reported.
  std::vector<RegionCell> adds;
  for (const PiecewiseSignature* ps : {&pa, &pb}) {
    for (const PiecewisePart& p : ps->parts) {
      if (p.cell.kind != RegionCell::Kind::Point) continue;
      bool truth = completion_member(kind, a, b, p.cell.c1);
      bool rendered = member(p.cell.c1, region);
      if (truth && !rendered) adds.push_back(p.cell);
      if (!truth && rendered)
        fail(ErrorKind::Unrepresentable,
             "completion spectrum excludes an isolated point of an included cell");
    }
  }
  if (!adds.empty()) {
    std::vector<RegionCell> base = region.cells();
    base.insert(base.end(), adds.begin(), adds.end());
    region = Region(std::move(base));
  }
  return region;
}

}  // namespace samop
