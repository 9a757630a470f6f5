#pragma once

#include <string>
#include <vector>

#include "samop/scalar.hpp"

namespace samop {

// ---------------------------------------------------------------------------
// Exact planar sets: finite unions of points, circles and open annuli with
// Gaussian-rational centers and rational squared radii, plus symbolic
// root-pair cells for the (conjugate, irrational) intersection points of two
// circles around distinct centers. Every spectrum of the engine lives in this
// family. Radii are stored squared so all comparisons are rational; the few
// genuinely quadratic comparisons (distances between circles at different
// centers) are decided by sign-aware squaring, never numerically.
// ---------------------------------------------------------------------------

struct RegionCell {
  enum class Kind { Point, Circle, Annulus, RootPair };
  Kind kind = Kind::Point;

  GaussianRational c1;  // point / center / first root-pair center
  GaussianRational c2;  // second root-pair center
  mpq_class a = 0;      // circle r² / annulus inner r² / first root-pair r²
  mpq_class b = 0;      // annulus outer r² / second root-pair r²
  bool b_infinite = false;  // annulus with outer radius ∞

  static RegionCell point(GaussianRational z);
  static RegionCell circle(GaussianRational center, mpq_class r2);
  static RegionCell annulus(GaussianRational center, mpq_class inner_r2,
                            mpq_class outer_r2);
  static RegionCell annulus_unbounded(GaussianRational center, mpq_class inner_r2);
  // Intersection set of two circles with distinct centers.
  static RegionCell root_pair(GaussianRational center1, mpq_class r2_1,
                              GaussianRational center2, mpq_class r2_2);

  bool operator==(const RegionCell&) const;
  std::string str() const;
};

class Region {
 public:
  Region() = default;
  explicit Region(std::vector<RegionCell> cells);

  static Region empty() { return Region(); }
  static Region whole_plane();

  const std::vector<RegionCell>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }

  bool operator==(const Region& o) const;
  std::string str() const;
  // Named description for common shapes ("unit circle", "closed unit disk").
  std::string describe() const;

 private:
  std::vector<RegionCell> cells_;  // canonical form
};

bool member(const GaussianRational& z, const RegionCell& cell);
bool member(const GaussianRational& z, const Region& r);

// Image under complex conjugation (a symmetry of every cell kind).
Region region_conjugate(const Region& a);

Region region_union(const Region& a, const Region& b);
// Throws Unrepresentable when the exact intersection leaves the cell family
// (an arc or a lens).
Region region_intersect(const Region& a, const Region& b);
Region region_complement(const Region& a);
bool region_equals(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);

// Exact intersection of two cells, when representable.
std::vector<RegionCell> intersect_cells(const RegionCell& x, const RegionCell& y);

// Is x a subset of y? Decided exactly.
bool cell_subset(const RegionCell& x, const RegionCell& y);

// sign of P + Q·√W for rationals with W ≥ 0 (exact).
int surd_sign(const mpq_class& p, const mpq_class& q, const mpq_class& w);

}  // namespace samop
