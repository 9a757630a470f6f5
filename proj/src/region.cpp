#include "samop/region.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "samop/errors.hpp"

namespace samop {

namespace {

int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

// Exact square root of a rational when it is a perfect square.
std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
  }
  return std::nullopt;
}

int cmp_q(const mpq_class& a, const mpq_class& b) { return cmp(a, b); }

bool lex_less(const GaussianRational& a, const GaussianRational& b) { return a < b; }

}  // namespace

int surd_sign(const mpq_class& p, const mpq_class& q, const mpq_class& w) {
  if (sgn(w) < 0) fail(ErrorKind::Internal, "surd_sign with negative radicand");
  if (sgn(w) == 0 || sgn(q) == 0) return sgn(p);
  if (auto r = exact_sqrt(w)) return sgn(p + q * *r);
  int sp = sgn(p), sq = sgn(q);
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // p and q·√w have opposite signs: compare magnitudes exactly.
  int c = cmp_q(p * p, q * q * w);
  if (c == 0) return 0;  // unreachable for irrational √w, kept for exactness
  return c > 0 ? sp : sq;
}

// ---------------------------------------------------------------------------
// cells
// ---------------------------------------------------------------------------

RegionCell RegionCell::point(GaussianRational z) {
  RegionCell c;
  c.kind = Kind::Point;
  c.c1 = std::move(z);
  return c;
}

RegionCell RegionCell::circle(GaussianRational center, mpq_class r2) {
  if (sgn(r2) < 0) fail(ErrorKind::Internal, "circle with negative r²");
  if (sgn(r2) == 0) return point(std::move(center));
  RegionCell c;
  c.kind = Kind::Circle;
  c.c1 = std::move(center);
  c.a = std::move(r2);
  return c;
}

RegionCell RegionCell::annulus(GaussianRational center, mpq_class inner_r2,
                               mpq_class outer_r2) {
  if (sgn(inner_r2) < 0 || cmp_q(inner_r2, outer_r2) >= 0)
    fail(ErrorKind::Internal, "annulus needs 0 <= inner < outer");
  RegionCell c;
  c.kind = Kind::Annulus;
  c.c1 = std::move(center);
  c.a = std::move(inner_r2);
  c.b = std::move(outer_r2);
  return c;
}

RegionCell RegionCell::annulus_unbounded(GaussianRational center, mpq_class inner_r2) {
  if (sgn(inner_r2) < 0) fail(ErrorKind::Internal, "annulus needs inner >= 0");
  RegionCell c;
  c.kind = Kind::Annulus;
  c.c1 = std::move(center);
  c.a = std::move(inner_r2);
  c.b_infinite = true;
  return c;
}

RegionCell RegionCell::root_pair(GaussianRational center1, mpq_class r2_1,
                                 GaussianRational center2, mpq_class r2_2) {
  if (center1 == center2) fail(ErrorKind::Internal, "root pair needs distinct centers");
  RegionCell c;
  c.kind = Kind::RootPair;
  if (lex_less(center2, center1)) {
    std::swap(center1, center2);
    std::swap(r2_1, r2_2);
  }
  c.c1 = std::move(center1);
  c.c2 = std::move(center2);
  c.a = std::move(r2_1);
  c.b = std::move(r2_2);
  return c;
}

namespace {

// Radical-line parametrization of two circles: z(t) = z0 + t·dir with the
// intersection parameters t = t0 ± t1·√disc, everything rational.
struct PairData {
  GaussianRational z0, dir;
  mpq_class t0, t1, disc;
};

PairData pair_data(const GaussianRational& c1, const mpq_class& a,
                   const GaussianRational& c2, const mpq_class& b) {
  PairData d;
  GaussianRational w = c2 - c1;
  mpq_class w2 = w.norm2();
  mpq_class e = c2.norm2() - c1.norm2() + a - b;
  d.z0 = GaussianRational(e / (2 * w2)) * w;
  d.dir = GaussianRational::i() * w;
  mpq_class s_coef = w2;  // |dir|²
  GaussianRational rel = d.z0 - c1;
  mpq_class r_coef = (rel * d.dir.conj()).re();
  mpq_class c_coef = rel.norm2() - a;
  d.t0 = -r_coef / s_coef;
  d.t1 = mpq_class(1) / (2 * s_coef);
  d.disc = 4 * (r_coef * r_coef - s_coef * c_coef);
  return d;
}

PairData pair_data(const RegionCell& rp) { return pair_data(rp.c1, rp.a, rp.c2, rp.b); }

// |z(t±) − c|² as p ± q·√disc.
void eval_dist2_at_roots(const PairData& d, const GaussianRational& c, mpq_class& p,
                         mpq_class& q) {
  GaussianRational rel = d.z0 - c;
  mpq_class s_coef = d.dir.norm2();
  mpq_class r = (rel * d.dir.conj()).re();
  p = rel.norm2() + 2 * d.t0 * r + (d.t0 * d.t0 + d.t1 * d.t1 * d.disc) * s_coef;
  q = 2 * d.t1 * (r + d.t0 * s_coef);
}

// Sum and product of the two intersection points: the coefficients of their
// monic quadratic, canonical for set equality.
void root_sum_product(const PairData& d, GaussianRational& s, GaussianRational& p) {
  GaussianRational two_t0(2 * d.t0);
  s = d.z0 + d.z0 + two_t0 * d.dir;
  mpq_class prod_t = d.t0 * d.t0 - d.t1 * d.t1 * d.disc;
  p = d.z0 * d.z0 + two_t0 * (d.z0 * d.dir) + GaussianRational(prod_t) * (d.dir * d.dir);
}

// Intersection set of two distinct-center circles as cells.
std::vector<RegionCell> resolve_circle_pair(const GaussianRational& c1, const mpq_class& a,
                                            const GaussianRational& c2,
                                            const mpq_class& b) {
  PairData d = pair_data(c1, a, c2, b);
  std::vector<RegionCell> out;
  int ds = sgn(d.disc);
  if (ds < 0) return out;
  if (ds == 0) {
    out.push_back(RegionCell::point(d.z0 + GaussianRational(d.t0) * d.dir));
    return out;
  }
  if (auto r = exact_sqrt(d.disc)) {
    GaussianRational tp(d.t0 + d.t1 * *r), tm(d.t0 - d.t1 * *r);
    out.push_back(RegionCell::point(d.z0 + tp * d.dir));
    out.push_back(RegionCell::point(d.z0 + tm * d.dir));
    return out;
  }
  out.push_back(RegionCell::root_pair(c1, a, c2, b));
  return out;
}

// A rational circle contains the conjugate intersection points together or
// not at all (the evaluation is p ± q·√disc with √disc irrational).
bool roots_on_circle(const RegionCell& rp, const GaussianRational& c, const mpq_class& r2) {
  PairData d = pair_data(rp);
  mpq_class p, q;
  eval_dist2_at_roots(d, c, p, q);
  return p - r2 == 0 && q == 0;
}

enum class RootsInCell { Both, Neither, Split };

RootsInCell roots_in_annulus(const RegionCell& rp, const GaussianRational& c,
                             const mpq_class& inner, const mpq_class* outer) {
  PairData d = pair_data(rp);
  mpq_class p, q;
  eval_dist2_at_roots(d, c, p, q);
  auto inside = [&](int sign_q) {
    mpq_class qq = sign_q > 0 ? q : mpq_class(-q);
    if (surd_sign(p - inner, qq, d.disc) <= 0) return false;
    if (outer && surd_sign(p - *outer, qq, d.disc) >= 0) return false;
    return true;
  };
  bool plus = inside(+1), minus = inside(-1);
  if (plus && minus) return RootsInCell::Both;
  if (!plus && !minus) return RootsInCell::Neither;
  return RootsInCell::Split;
}

bool same_roots(const RegionCell& x, const RegionCell& y) {
  GaussianRational sx, px, sy, py;
  root_sum_product(pair_data(x), sx, px);
  root_sum_product(pair_data(y), sy, py);
  return sx == sy && px == py;
}

}  // namespace

bool RegionCell::operator==(const RegionCell& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Point:
      return c1 == o.c1;
    case Kind::Circle:
      return c1 == o.c1 && a == o.a;
    case Kind::Annulus:
      return c1 == o.c1 && a == o.a && b_infinite == o.b_infinite &&
             (b_infinite || b == o.b);
    case Kind::RootPair:
      return same_roots(*this, o);
  }
  return false;
}

std::string RegionCell::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Point:
      os << "point " << c1.str();
      break;
    case Kind::Circle:
      os << "circle(center " << c1.str() << ", r² = " << rational_str(a) << ")";
      break;
    case Kind::Annulus:
      os << "annulus(center " << c1.str() << ", " << rational_str(a) << " < r² < "
         << (b_infinite ? std::string("∞") : rational_str(b)) << ")";
      break;
    case Kind::RootPair:
      os << "intersection points of circle(" << c1.str() << ", r² = " << rational_str(a)
         << ") and circle(" << c2.str() << ", r² = " << rational_str(b) << ")";
      break;
  }
  return os.str();
}

bool member(const GaussianRational& z, const RegionCell& cell) {
  switch (cell.kind) {
    case RegionCell::Kind::Point:
      return z == cell.c1;
    case RegionCell::Kind::Circle:
      return (z - cell.c1).norm2() == cell.a;
    case RegionCell::Kind::Annulus: {
      mpq_class d = (z - cell.c1).norm2();
      if (cmp_q(d, cell.a) <= 0) return false;
      return cell.b_infinite || cmp_q(d, cell.b) < 0;
    }
    case RegionCell::Kind::RootPair:
      // A Gaussian-rational point satisfies both equations only in the
      // rational case, which canonicalization resolves to Point cells.
      return (z - cell.c1).norm2() == cell.a && (z - cell.c2).norm2() == cell.b;
  }
  return false;
}

bool member(const GaussianRational& z, const Region& r) {
  for (const RegionCell& c : r.cells())
    if (member(z, c)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// subset tests (exact; quadratic-surd comparisons across centers)
// ---------------------------------------------------------------------------

namespace {

// The distance² from q over the circle |z − p|² = r2 ranges over
// [d² + r² − 2√(d²r²), d² + r² + 2√(d²r²)].
bool circle_inside_annulus(const GaussianRational& p, const mpq_class& r2,
                           const GaussianRational& q, const mpq_class& inner,
                           const mpq_class* outer) {
  mpq_class d2 = (p - q).norm2();
  mpq_class w = d2 * r2;
  if (surd_sign(d2 + r2 - inner, mpq_class(-2), w) <= 0) return false;
  if (outer && surd_sign(d2 + r2 - *outer, mpq_class(2), w) >= 0) return false;
  return true;
}

bool circle_outside_annulus(const GaussianRational& p, const mpq_class& r2,
                            const GaussianRational& q, const mpq_class& inner,
                            const mpq_class* outer) {
  mpq_class d2 = (p - q).norm2();
  mpq_class w = d2 * r2;
  // whole circle inside the closed hole, or beyond the closed outer circle
  if (surd_sign(d2 + r2 - inner, mpq_class(2), w) <= 0) return true;
  if (outer && surd_sign(d2 + r2 - *outer, mpq_class(-2), w) >= 0) return true;
  return false;
}

bool annulus_inside_annulus(const GaussianRational& p, const mpq_class& i1,
                            const mpq_class* o1, const GaussianRational& q,
                            const mpq_class& i2, const mpq_class* o2) {
  mpq_class d2 = (p - q).norm2();
  if (o2) {
    if (!o1) return false;
    // sup |z − q| = d + √o1: need (d + √o1)² ≤ o2
    if (surd_sign(d2 + *o1 - *o2, mpq_class(2), d2 * *o1) > 0) return false;
  }
  if (sgn(i2) > 0) {
    // a positive lower bound exists only when q avoids the closed ring
    if (cmp_q(d2, i1) < 0) {
      // q inside the hole: inf = √i1 − d, need (√i1 − d)² ≥ i2
      if (surd_sign(d2 + i1 - i2, mpq_class(-2), d2 * i1) < 0) return false;
    } else if (o1 && cmp_q(d2, *o1) > 0) {
      // q outside: inf = d − √o1
      if (surd_sign(d2 + *o1 - i2, mpq_class(-2), d2 * *o1) < 0) return false;
    } else {
      return false;  // q in the closure of the source ring
    }
  } else {
    // target is punctured (or solid disk): only q itself must be avoided
    bool q_in_source = cmp_q(d2, i1) > 0 && (!o1 || cmp_q(d2, *o1) < 0);
    if (q_in_source) return false;
  }
  return true;
}

bool annuli_disjoint(const GaussianRational& p, const mpq_class& i1, const mpq_class* o1,
                     const GaussianRational& q, const mpq_class& i2, const mpq_class* o2) {
  mpq_class d2 = (p - q).norm2();
  // outward separation: d ≥ √o1 + √o2
  if (o1 && o2 && surd_sign(d2 - *o1 - *o2, mpq_class(-2), *o1 * *o2) >= 0) return true;
  // one ring entirely inside the other's hole: d + √o ≤ √i
  if (o1 && surd_sign(d2 + *o1 - i2, mpq_class(2), d2 * *o1) <= 0) return true;
  if (o2 && surd_sign(d2 + *o2 - i1, mpq_class(2), d2 * *o2) <= 0) return true;
  return false;
}

const mpq_class* outer_of(const RegionCell& c) { return c.b_infinite ? nullptr : &c.b; }

}  // namespace

bool cell_subset(const RegionCell& x, const RegionCell& y) {
  using K = RegionCell::Kind;
  if (x == y) return true;
  switch (x.kind) {
    case K::Point:
      return member(x.c1, y);
    case K::Circle:
      if (y.kind == K::Circle) return x.c1 == y.c1 && x.a == y.a;
      if (y.kind == K::Annulus) {
        if (x.c1 == y.c1)
          return cmp_q(y.a, x.a) < 0 && (y.b_infinite || cmp_q(x.a, y.b) < 0);
        return circle_inside_annulus(x.c1, x.a, y.c1, y.a, outer_of(y));
      }
      return false;
    case K::Annulus:
      if (y.kind != K::Annulus) return false;
      if (x.c1 == y.c1)
        return cmp_q(y.a, x.a) <= 0 &&
               (y.b_infinite || (!x.b_infinite && cmp_q(x.b, y.b) <= 0));
      return annulus_inside_annulus(x.c1, x.a, outer_of(x), y.c1, y.a, outer_of(y));
    case K::RootPair:
      if (y.kind == K::RootPair) return same_roots(x, y);
      if (y.kind == K::Point) return false;
      if (y.kind == K::Circle) return roots_on_circle(x, y.c1, y.a);
      return roots_in_annulus(x, y.c1, y.a, outer_of(y)) == RootsInCell::Both;
  }
  return false;
}

// ---------------------------------------------------------------------------
// cell intersection
// ---------------------------------------------------------------------------

std::vector<RegionCell> intersect_cells(const RegionCell& x, const RegionCell& y) {
  using K = RegionCell::Kind;
  if (static_cast<int>(y.kind) < static_cast<int>(x.kind)) return intersect_cells(y, x);

  if (x.kind == K::Point)
    return member(x.c1, y) ? std::vector<RegionCell>{x} : std::vector<RegionCell>{};

  if (x.kind == K::Circle && y.kind == K::Circle) {
    if (x.c1 == y.c1)
      return x.a == y.a ? std::vector<RegionCell>{x} : std::vector<RegionCell>{};
    return resolve_circle_pair(x.c1, x.a, y.c1, y.a);
  }

  if (x.kind == K::Circle && y.kind == K::Annulus) {
    if (x.c1 == y.c1) {
      bool inside = cmp_q(y.a, x.a) < 0 && (y.b_infinite || cmp_q(x.a, y.b) < 0);
      return inside ? std::vector<RegionCell>{x} : std::vector<RegionCell>{};
    }
    if (circle_inside_annulus(x.c1, x.a, y.c1, y.a, outer_of(y)))
      return {x};
    if (circle_outside_annulus(x.c1, x.a, y.c1, y.a, outer_of(y))) return {};
    fail(ErrorKind::Unrepresentable,
         "circle ∩ annulus around a different center is an arc: " + x.str() + " ∩ " +
             y.str());
  }

  if (x.kind == K::Annulus && y.kind == K::Annulus) {
    if (x.c1 == y.c1) {
      mpq_class lo = std::max(x.a, y.a);
      if (x.b_infinite && y.b_infinite) return {RegionCell::annulus_unbounded(x.c1, lo)};
      mpq_class hi = x.b_infinite ? y.b : (y.b_infinite ? x.b : std::min(x.b, y.b));
      if (cmp_q(lo, hi) >= 0) return {};
      return {RegionCell::annulus(x.c1, lo, hi)};
    }
    if (annuli_disjoint(x.c1, x.a, outer_of(x), y.c1, y.a, outer_of(y))) return {};
    if (cell_subset(x, y)) return {x};
    if (cell_subset(y, x)) return {y};
    fail(ErrorKind::Unrepresentable,
         "annulus ∩ annulus around different centers is a lens: " + x.str() + " ∩ " +
             y.str());
  }

  // anything against a root pair
  const RegionCell& rp = x.kind == K::RootPair ? x : y;
  const RegionCell& other = x.kind == K::RootPair ? y : x;
  if (other.kind == K::RootPair)
    return same_roots(rp, other) ? std::vector<RegionCell>{rp} : std::vector<RegionCell>{};
  if (other.kind == K::Circle)
    return roots_on_circle(rp, other.c1, other.a) ? std::vector<RegionCell>{rp}
                                                  : std::vector<RegionCell>{};
  switch (roots_in_annulus(rp, other.c1, other.a, outer_of(other))) {
    case RootsInCell::Both:
      return {rp};
    case RootsInCell::Neither:
      return {};
    case RootsInCell::Split:
      fail(ErrorKind::Unrepresentable,
           "annulus separates a conjugate root pair: " + rp.str());
  }
  fail(ErrorKind::Internal, "unhandled cell intersection");
}

// ---------------------------------------------------------------------------
// canonicalization
// ---------------------------------------------------------------------------

namespace {

bool cell_less(const RegionCell& a, const RegionCell& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.c1 != b.c1) return lex_less(a.c1, b.c1);
  int c = cmp_q(a.a, b.a);
  if (c != 0) return c < 0;
  if (a.b_infinite != b.b_infinite) return b.b_infinite;
  c = cmp_q(a.b, b.b);
  if (c != 0) return c < 0;
  return lex_less(a.c2, b.c2);
}

struct Interval {
  mpq_class lo;
  mpq_class hi;
  bool hi_inf = false;
};

// Radial structure at one center: union of open intervals and circle radii on
// the r² half-line. A circle strictly inside an interval is absorbed; a
// circle abutting two intervals bridges them.
void merge_radial(std::vector<Interval>& ivs, std::vector<mpq_class>& circles) {
  std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
    int c = cmp_q(a.lo, b.lo);
    if (c != 0) return c < 0;
    if (a.hi_inf != b.hi_inf) return b.hi_inf;
    return cmp_q(a.hi, b.hi) < 0;
  });
  std::sort(circles.begin(), circles.end(),
            [](const mpq_class& a, const mpq_class& b) { return cmp_q(a, b) < 0; });
  circles.erase(std::unique(circles.begin(), circles.end()), circles.end());

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Interval> merged;
    for (const Interval& iv : ivs) {
      if (!merged.empty()) {
        Interval& last = merged.back();
        if (last.hi_inf || cmp_q(iv.lo, last.hi) < 0) {
          if (!last.hi_inf && (iv.hi_inf || cmp_q(iv.hi, last.hi) > 0)) {
            last.hi = iv.hi;
            last.hi_inf = iv.hi_inf;
          }
          continue;
        }
      }
      merged.push_back(iv);
    }
    ivs = std::move(merged);

    std::vector<mpq_class> keep;
    for (const mpq_class& r : circles) {
      bool absorbed = false;
      for (std::size_t i = 0; i < ivs.size() && !absorbed; ++i) {
        if (cmp_q(r, ivs[i].lo) > 0 && (ivs[i].hi_inf || cmp_q(r, ivs[i].hi) < 0)) {
          absorbed = true;
        } else if (!ivs[i].hi_inf && cmp_q(r, ivs[i].hi) == 0 && i + 1 < ivs.size() &&
                   cmp_q(r, ivs[i + 1].lo) == 0) {
          ivs[i].hi = ivs[i + 1].hi;
          ivs[i].hi_inf = ivs[i + 1].hi_inf;
          ivs.erase(ivs.begin() + static_cast<long>(i) + 1);
          absorbed = true;
        }
      }
      if (absorbed)
        changed = true;
      else
        keep.push_back(r);
    }
    circles = std::move(keep);
  }
}

std::vector<RegionCell> canonicalize(std::vector<RegionCell> cells) {
  // degenerate and rational root pairs become points
  std::vector<RegionCell> flat;
  for (RegionCell& c : cells) {
    if (c.kind == RegionCell::Kind::RootPair) {
      std::vector<RegionCell> r = resolve_circle_pair(c.c1, c.a, c.c2, c.b);
      flat.insert(flat.end(), r.begin(), r.end());
    } else {
      flat.push_back(std::move(c));
    }
  }

  // same-center radial merge
  std::vector<RegionCell> out;
  std::vector<bool> used(flat.size(), false);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (used[i]) continue;
    const RegionCell& c = flat[i];
    if (c.kind != RegionCell::Kind::Circle && c.kind != RegionCell::Kind::Annulus) {
      out.push_back(c);
      continue;
    }
    std::vector<Interval> ivs;
    std::vector<mpq_class> circles;
    for (std::size_t j = i; j < flat.size(); ++j) {
      if (used[j]) continue;
      const RegionCell& d = flat[j];
      if (d.c1 != c.c1) continue;
      if (d.kind == RegionCell::Kind::Circle) {
        circles.push_back(d.a);
        used[j] = true;
      } else if (d.kind == RegionCell::Kind::Annulus) {
        ivs.push_back({d.a, d.b, d.b_infinite});
        used[j] = true;
      }
    }
    merge_radial(ivs, circles);
    for (const Interval& iv : ivs)
      out.push_back(iv.hi_inf ? RegionCell::annulus_unbounded(c.c1, iv.lo)
                              : RegionCell::annulus(c.c1, iv.lo, iv.hi));
    for (const mpq_class& r : circles) out.push_back(RegionCell::circle(c.c1, r));
  }

  // duplicates, then cells covered by another single cell
  std::sort(out.begin(), out.end(), cell_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RegionCell& a, const RegionCell& b) { return a == b; }),
            out.end());
  std::vector<RegionCell> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < out.size() && !covered; ++j)
      if (i != j && cell_subset(out[i], out[j])) covered = true;
    if (!covered) kept.push_back(out[i]);
  }
  return kept;
}

}  // namespace

Region::Region(std::vector<RegionCell> cells) : cells_(canonicalize(std::move(cells))) {}

Region Region::whole_plane() {
  return Region({RegionCell::point(GaussianRational(0)),
                 RegionCell::annulus_unbounded(GaussianRational(0), mpq_class(0))});
}

bool Region::operator==(const Region& o) const {
  if (cells_.size() != o.cells_.size()) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!(cells_[i] == o.cells_[i])) return false;
  return true;
}

std::string Region::str() const {
  if (cells_.empty()) return "∅";
  std::ostringstream os;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) os << " ∪ ";
    os << cells_[i].str();
  }
  return os.str();
}

std::string Region::describe() const {
  if (cells_.empty()) return "empty set";
  const GaussianRational zero(0);
  if (cells_.size() == 1 && cells_[0].kind == RegionCell::Kind::Circle) {
    if (cells_[0].c1 == zero && cells_[0].a == 1) return "unit circle";
    return cells_[0].str();
  }
  if (cells_.size() == 2 && cells_[0].kind == RegionCell::Kind::Point &&
      cells_[1].kind == RegionCell::Kind::Annulus && cells_[0].c1 == cells_[1].c1 &&
      sgn(cells_[1].a) == 0) {
    if (cells_[1].b_infinite) return "the whole plane";
    if (cells_[0].c1 == zero && cells_[1].b == 1) return "open unit disk";
    return "open disk(center " + cells_[0].c1.str() + ", r² < " +
           rational_str(cells_[1].b) + ")";
  }
  if (cells_.size() == 3 && cells_[0].kind == RegionCell::Kind::Point &&
      cells_[1].kind == RegionCell::Kind::Circle &&
      cells_[2].kind == RegionCell::Kind::Annulus && !cells_[2].b_infinite &&
      sgn(cells_[2].a) == 0 && cells_[0].c1 == cells_[2].c1 &&
      cells_[1].c1 == cells_[2].c1 && cells_[1].a == cells_[2].b) {
    if (cells_[0].c1 == zero && cells_[1].a == 1) return "closed unit disk";
    return "closed disk(center " + cells_[0].c1.str() + ", r² ≤ " +
           rational_str(cells_[1].a) + ")";
  }
  return str();
}

// ---------------------------------------------------------------------------
// region operations
// ---------------------------------------------------------------------------

Region region_conjugate(const Region& a) {
  std::vector<RegionCell> cells;
  for (RegionCell c : a.cells()) {
    c.c1 = c.c1.conj();
    c.c2 = c.c2.conj();
    cells.push_back(std::move(c));
  }
  return Region(std::move(cells));
}

Region region_union(const Region& a, const Region& b) {
  std::vector<RegionCell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return Region(std::move(cells));
}

Region region_intersect(const Region& a, const Region& b) {
  std::vector<RegionCell> cells;
  for (const RegionCell& x : a.cells())
    for (const RegionCell& y : b.cells()) {
      std::vector<RegionCell> piece = intersect_cells(x, y);
      cells.insert(cells.end(), piece.begin(), piece.end());
    }
  return Region(std::move(cells));
}

namespace {

Region complement_cell(const RegionCell& c) {
  using K = RegionCell::Kind;
  std::vector<RegionCell> out;
  switch (c.kind) {
    case K::Point:
      out.push_back(RegionCell::annulus_unbounded(c.c1, mpq_class(0)));
      break;
    case K::Circle:
      out.push_back(RegionCell::point(c.c1));
      out.push_back(RegionCell::annulus(c.c1, mpq_class(0), c.a));
      out.push_back(RegionCell::annulus_unbounded(c.c1, c.a));
      break;
    case K::Annulus:
      out.push_back(RegionCell::point(c.c1));
      if (sgn(c.a) > 0) {
        out.push_back(RegionCell::annulus(c.c1, mpq_class(0), c.a));
        out.push_back(RegionCell::circle(c.c1, c.a));
      }
      if (!c.b_infinite) {
        out.push_back(RegionCell::circle(c.c1, c.b));
        out.push_back(RegionCell::annulus_unbounded(c.c1, c.b));
      }
      break;
    case K::RootPair:
      fail(ErrorKind::Unrepresentable,
           "complement of an irrational point pair is not representable");
  }
  return Region(std::move(out));
}

}  // namespace

Region region_complement(const Region& a) {
  Region acc = Region::whole_plane();
  for (const RegionCell& c : a.cells()) acc = region_intersect(acc, complement_cell(c));
  return acc;
}

bool region_equals(const Region& a, const Region& b) { return a == b; }

bool region_subset(const Region& a, const Region& b) {
  if (region_union(a, b) == b) return true;
  for (const RegionCell& x : a.cells()) {
    bool covered = false;
    for (const RegionCell& y : b.cells())
      if (cell_subset(x, y)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace samop
