#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "samop/errors.hpp"
#include "samop/region.hpp"

using namespace samop;

namespace {
const GQ zero(0);
Region unit_circle() { return Region({RegionCell::circle(zero, 1)}); }
Region closed_unit_disk() {
  return Region({RegionCell::point(zero), RegionCell::annulus(zero, 0, 1),
                 RegionCell::circle(zero, 1)});
}

std::vector<GQ> sample_points() {
  std::vector<GQ> pts;
  for (int pr = -2; pr <= 2; ++pr)
    for (int pi = -2; pi <= 2; ++pi)
      for (int q : {1, 2, 3}) pts.push_back(GQ::from_ratio(pr, q, pi, q));
  pts.push_back(GQ::from_ratio(3, 5, 4, 5));
  pts.push_back(GQ::from_ratio(-3, 5, 4, 5));
  pts.push_back(GQ::from_ratio(5, 13, 12, 13));
  return pts;
}
}  // namespace

TEST_CASE("membership is exact rational arithmetic") {
  CHECK(member(GQ(1), RegionCell::circle(zero, 1)));
  CHECK(!member(GQ::from_ratio(1, 2), RegionCell::circle(zero, 1)));
  CHECK(member(GQ::from_ratio(3, 5, 4, 5), RegionCell::circle(zero, 1)));
  CHECK(member(GQ::from_ratio(1, 2), RegionCell::annulus(zero, 0, 1)));
  CHECK(!member(zero, RegionCell::annulus(zero, 0, 1)));  // punctured
  CHECK(member(zero, RegionCell::point(zero)));
}

TEST_CASE("surd comparisons") {
  // 1 + √2 > 2, 1 − √2 < 0, 3 − √4 > 0
  CHECK(surd_sign(mpq_class(-1), mpq_class(1), mpq_class(2)) > 0);
  CHECK(surd_sign(mpq_class(1), mpq_class(-1), mpq_class(2)) < 0);
  CHECK(surd_sign(mpq_class(3), mpq_class(-1), mpq_class(4)) > 0);
  CHECK(surd_sign(mpq_class(2), mpq_class(-1), mpq_class(4)) == 0);
}

TEST_CASE("canonical merge of abutting annuli through a circle") {
  Region r({RegionCell::annulus(zero, 0, 1), RegionCell::circle(zero, 1),
            RegionCell::annulus(zero, 1, 4)});
  Region expect({RegionCell::annulus(zero, 0, 4)});
  CHECK(r == expect);
  // without the bridging circle the pieces stay separate
  Region gap({RegionCell::annulus(zero, 0, 1), RegionCell::annulus(zero, 1, 4)});
  CHECK(gap.cells().size() == 2);
}

TEST_CASE("points inside covered cells are removed") {
  Region r({RegionCell::point(GQ::from_ratio(1, 2)), RegionCell::annulus(zero, 0, 1)});
  CHECK(r.cells().size() == 1);
  Region keep({RegionCell::point(zero), RegionCell::annulus(zero, 0, 1)});
  CHECK(keep.cells().size() == 2);  // the puncture is not covered
}

TEST_CASE("canonicalization is idempotent") {
  std::vector<RegionCell> cells = {
      RegionCell::annulus(zero, 0, 1), RegionCell::circle(zero, 1),
      RegionCell::point(GQ(1)), RegionCell::annulus_unbounded(GQ::i(), 2),
      RegionCell::circle(GQ::i(), 2)};
  Region once(cells);
  Region twice(once.cells());
  CHECK(once == twice);
}

TEST_CASE("closed unit disk assembles canonically") {
  Region r = region_union(Region({RegionCell::annulus(zero, 0, 1)}),
                          region_union(unit_circle(), Region({RegionCell::point(zero)})));
  CHECK(r == closed_unit_disk());
  CHECK(r.describe() == "closed unit disk");
}

TEST_CASE("full plane complement is empty") {
  Region full = Region::whole_plane();
  CHECK(region_complement(full).is_empty());
  CHECK(region_equals(Region::empty(), region_complement(full)));
  CHECK(region_complement(Region::empty()) == full);
}

TEST_CASE("intersection examples") {
  Region r = region_intersect(unit_circle(), Region({RegionCell::point(GQ(1))}));
  CHECK(r == Region({RegionCell::point(GQ(1))}));
  Region s = region_intersect(unit_circle(), Region({RegionCell::point(GQ::from_ratio(1, 2))}));
  CHECK(s.is_empty());
}

TEST_CASE("distinct-center circle intersections") {
  // circles through rational points: |z|² = 1 and |z − 1|² = 1 meet at
  // 1/2 ± (√3/2)i — irrational, stored as a root pair
  Region rp = region_intersect(unit_circle(), Region({RegionCell::circle(GQ(1), 1)}));
  REQUIRE(rp.cells().size() == 1);
  CHECK(rp.cells()[0].kind == RegionCell::Kind::RootPair);
  // no rational point lies on a root pair
  for (const GQ& z : sample_points()) CHECK(!member(z, rp));

  // circles |z|² = 25 and |z − 6|² = 25 meet at the rational points 3 ± 4i
  Region rational = region_intersect(Region({RegionCell::circle(zero, 25)}),
                                     Region({RegionCell::circle(GQ(6), 25)}));
  REQUIRE(rational.cells().size() == 2);
  CHECK(member(GQ::from_ratio(3, 1, 4, 1), rational));
  CHECK(member(GQ::from_ratio(3, 1, -4, 1), rational));

  // tangent circles meet in one rational point
  Region tangent = region_intersect(unit_circle(), Region({RegionCell::circle(GQ(2), 1)}));
  REQUIRE(tangent.cells().size() == 1);
  CHECK(member(GQ(1), tangent));

  // far apart: empty
  Region none = region_intersect(unit_circle(), Region({RegionCell::circle(GQ(10), 1)}));
  CHECK(none.is_empty());
}

TEST_CASE("distinct-center containment and disjointness") {
  // small annulus near 5 sits inside the big ring around 0
  RegionCell big = RegionCell::annulus(zero, 1, 100);
  RegionCell small = RegionCell::annulus(GQ(5), 0, 1);
  CHECK(cell_subset(small, big));
  Region inter = region_intersect(Region({small}), Region({big}));
  CHECK(inter == Region({small}));
  // disjoint rings
  RegionCell far = RegionCell::annulus(GQ(100), 0, 1);
  CHECK(region_intersect(Region({far}), Region({RegionCell::annulus(zero, 0, 4)})).is_empty());
  // genuinely overlapping rings are not representable
  CHECK_THROWS_AS(
      (void)region_intersect(Region({RegionCell::annulus(zero, 0, 4)}),
                             Region({RegionCell::annulus(GQ(1), 0, 4)})),
      Error);
}

TEST_CASE("root pair subset of covering cells") {
  RegionCell rp = RegionCell::root_pair(zero, 1, GQ(1), 1);
  CHECK(cell_subset(rp, RegionCell::circle(zero, 1)));
  CHECK(cell_subset(rp, RegionCell::annulus(zero, mpq_class(1, 2), 2)));
  CHECK(!cell_subset(rp, RegionCell::annulus(zero, 2, 4)));
  // union with a covering circle drops the pair
  Region u = region_union(Region({rp}), unit_circle());
  CHECK(u == unit_circle());
}

TEST_CASE("boolean laws hold pointwise on samples") {
  // union membership across different centers
  Region a({RegionCell::annulus(zero, 0, 1), RegionCell::point(zero)});
  Region b({RegionCell::annulus(GQ::from_ratio(1, 4), 0, mpq_class(1, 4)),
            RegionCell::point(GQ(1))});
  Region u = region_union(a, b);
  for (const GQ& z : sample_points())
    CHECK(member(z, u) == (member(z, a) || member(z, b)));

  Region ca = region_complement(a);
  for (const GQ& z : sample_points()) CHECK(member(z, ca) == !member(z, a));

  // De Morgan on a concentric pair (complements stay representable there)
  Region c({RegionCell::annulus(zero, 4, 9), RegionCell::circle(zero, 16)});
  Region uc = region_union(a, c);
  Region cuc = region_complement(uc);
  for (const GQ& z : sample_points())
    CHECK(member(z, cuc) == (!member(z, a) && !member(z, c)));
  CHECK(region_equals(cuc, region_intersect(ca, region_complement(c))));
}

TEST_CASE("complements leaving the family are reported") {
  // the complement of two isolated points is the plane minus both, which no
  // finite cell union represents
  Region two_pts({RegionCell::point(zero), RegionCell::point(GQ(1))});
  CHECK_THROWS_AS((void)region_complement(two_pts), Error);
}

TEST_CASE("subset ordering") {
  CHECK(region_subset(unit_circle(), closed_unit_disk()));
  CHECK(!region_subset(closed_unit_disk(), unit_circle()));
  CHECK(region_subset(Region::empty(), unit_circle()));
  CHECK(region_subset(closed_unit_disk(), Region::whole_plane()));
}

TEST_CASE("describe names common regions") {
  CHECK(unit_circle().describe() == "unit circle");
  CHECK(Region::empty().describe() == "empty set");
  CHECK(Region::whole_plane().describe() == "the whole plane");
  Region open_disk({RegionCell::point(zero), RegionCell::annulus(zero, 0, 1)});
  CHECK(open_disk.describe() == "open unit disk");
}
