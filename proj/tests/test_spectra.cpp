#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/errors.hpp"
#include "samop/graph.hpp"
#include "samop/invariants.hpp"
#include "samop/spectra.hpp"

using namespace samop;

namespace {
const GQ zero(0);
Region unit_circle() { return Region({RegionCell::circle(zero, 1)}); }
Region closed_unit_disk() {
  return Region({RegionCell::point(zero), RegionCell::annulus(zero, 0, 1),
                 RegionCell::circle(zero, 1)});
}

// spot λ's: interior, boundary-adjacent rational, boundary (Pythagorean),
// exterior — one of each per tabled atom row, per the table contract
const GQ spots[] = {GQ(0), GQ::from_ratio(1, 2), GQ::from_ratio(3, 5, 4, 5), GQ(2)};
}  // namespace

TEST_CASE("shift atom rows at sample points") {
  ExprPtr u = shift();
  FredholmSignature inside = signature_at(u, GQ::from_ratio(1, 2)).sig;
  CHECK(inside.alpha == ExtNat(0));
  CHECK(inside.beta == ExtNat(1));
  CHECK(inside.range_closed);
  CHECK(inside.asc == ExtNat(0));
  CHECK(inside.des == ext_inf());
  CHECK(inside.smul == ExtNat(1));
  FredholmSignature on = signature_at(u, GQ::from_ratio(3, 5, 4, 5)).sig;
  CHECK(on.alpha == ExtNat(0));
  CHECK(on.beta == ext_inf());
  CHECK(!on.range_closed);
  CHECK(on.smul == ext_inf());
  FredholmSignature outside = signature_at(u, GQ(2)).sig;
  CHECK(classify_signature(outside).invertible);
}

TEST_CASE("backward shift mirrors inside, matches on the circle") {
  ExprPtr v = bshift();
  FredholmSignature inside = signature_at(v, GQ::from_ratio(1, 2)).sig;
  CHECK(inside.alpha == ExtNat(1));
  CHECK(inside.beta == ExtNat(0));
  CHECK(inside.asc == ext_inf());
  CHECK(inside.des == ExtNat(0));
  CHECK(inside.bsmul == ExtNat(1));
  // on the circle the formal eigenvectors are not ℓ², so α = 0 there too
  FredholmSignature on = signature_at(v, GQ(1)).sig;
  CHECK(on.alpha == ExtNat(0));
  CHECK(on.beta == ext_inf());
  CHECK(!on.range_closed);
}

TEST_CASE("bilateral shift fails only on its circle") {
  ExprPtr w = bilateral();
  CHECK(classify_signature(signature_at(w, GQ::from_ratio(1, 2)).sig).invertible);
  FredholmSignature on = signature_at(w, GQ::i()).sig;
  CHECK(!on.range_closed);
  CHECK(on.alpha == ExtNat(0));
  CHECK(on.beta == ext_inf());
  CHECK(classify_signature(signature_at(w, GQ(2)).sig).invertible);
}

TEST_CASE("diagonal and jordan point rows") {
  ExprPtr d = diag({{GQ(2), ext_inf()}});
  FredholmSignature at2 = signature_at(d, GQ(2)).sig;
  CHECK(at2.alpha == ext_inf());
  CHECK(at2.asc == ExtNat(1));
  CHECK(classify_signature(signature_at(d, GQ(1)).sig).invertible);

  FredholmSignature j = signature_at(jordan(2), zero).sig;
  CHECK(j.alpha == ExtNat(1));
  CHECK(j.beta == ExtNat(1));
  CHECK(j.asc == ExtNat(2));
  CHECK(j.des == ExtNat(2));
  CHECK(classify_signature(signature_at(jordan(2), GQ(1)).sig).invertible);
}

TEST_CASE("trimatrix rank-chain row") {
  DenseMat m(3, 3);
  m << GQ(1), GQ(1), GQ(0),
       GQ(0), GQ(1), GQ(0),
       GQ(0), GQ(0), GQ(2);
  ExprPtr t = trimatrix(m);
  // at λ=1 the matrix has a 2×2 Jordan cell
  FredholmSignature at1 = signature_at(t, GQ(1)).sig;
  CHECK(at1.alpha == ExtNat(1));
  CHECK(at1.asc == ExtNat(2));
  FredholmSignature at2 = signature_at(t, GQ(2)).sig;
  CHECK(at2.alpha == ExtNat(1));
  CHECK(at2.asc == ExtNat(1));
  CHECK(classify_signature(signature_at(t, GQ(3)).sig).invertible);
}

TEST_CASE("amplification at λ") {
  ExprPtr e = amplify(shift());
  FredholmSignature inside = signature_at(e, GQ::from_ratio(1, 2)).sig;
  CHECK(inside.alpha == ExtNat(0));
  CHECK(inside.beta == ext_inf());
  CHECK(inside.range_closed);
  CHECK(inside.smul == ext_inf());
  CHECK(inside.asc == ExtNat(0));
  // amplified Jordan block keeps its ascent but loses semi-Fredholmness
  FredholmSignature aj = signature_at(amplify(jordan(2)), zero).sig;
  CHECK(aj.alpha == ext_inf());
  CHECK(aj.asc == ExtNat(2));
  CHECK(!classify_signature(aj).semi_fredholm);
}

TEST_CASE("powers of atoms at λ") {
  // U² − λ: two forward rays of weight-1² shifts
  FredholmSignature p = signature_at(power(shift(), 2), GQ::from_ratio(1, 2)).sig;
  CHECK(p.beta == ExtNat(2));
  CHECK(p.smul == ExtNat(2));
  // (2U)² has radius² 16
  CHECK(classify_signature(signature_at(power(shift(GQ(2)), 2), GQ(2)).sig).invertible ==
        false);
  CHECK(classify_signature(signature_at(power(shift(GQ(2)), 2), GQ(5)).sig).invertible);
  // translated powers are exact at λ = 0 only
  ExprPtr tp = power(shift(GQ(1), GQ::from_ratio(1, 2)), 2);
  CHECK(signature_at(tp, zero).sig.beta == ExtNat(2));
  CHECK_THROWS_AS((void)signature_at(tp, GQ(1)), Error);
}

TEST_CASE("consistency of the two λ = 0 paths") {
  ExprPtr es[] = {shift(),
                  bshift(GQ(2)),
                  jordan(3),
                  direct_sum({shift(), jordan(2), bilateral()}),
                  amplify(direct_sum({shift(), bshift()})),
                  power(direct_sum({shift(), jordan(3)}), 2),
                  diag({{GQ(0), ExtNat(2)}, {GQ(1), ext_inf()}})};
  for (const ExprPtr& e : es) {
    FredholmSignature census_path = signature(e);
    FredholmSignature table_path = signature_at(e, zero).sig;
    CHECK(census_path == table_path);
  }
}

TEST_CASE("piecewise signature of the shift") {
  PiecewiseSignature ps = piecewise_signature(shift());
  // point 0, circle, punctured disk, exterior: three distinct signatures
  CHECK(ps.parts.size() == 4);
  CHECK(ps.at(GQ::from_ratio(1, 2)).sig.beta == ExtNat(1));
  CHECK(ps.at(GQ::from_ratio(3, 5, 4, 5)).sig.beta == ext_inf());
  CHECK(classify_signature(ps.at(GQ(7)).sig).invertible);
  CHECK(ps.at(zero).sig == ps.at(GQ::from_ratio(1, 2)).sig);
  // signatures match the direct evaluation on every part
  for (const GQ& z : spots) CHECK(ps.at(z).sig == signature_at(shift(), z).sig);
}

TEST_CASE("piecewise rejects non-concentric shift families") {
  ExprPtr e = direct_sum({shift(), shift(GQ(1), GQ(1))});
  CHECK_THROWS_AS((void)piecewise_signature(e), Error);
  // but spectra still work by recursion over the direct sum
  Region r = spectrum(e, SpectrumKind::Sigma);
  CHECK(member(zero, r));
  CHECK(member(GQ(1), r));
  CHECK(!member(GQ(4), r));
}

TEST_CASE("spectra of the shift") {
  CHECK(spectrum(shift(), SpectrumKind::Sigma) == closed_unit_disk());
  CHECK(spectrum(shift(), SpectrumKind::Left) == unit_circle());
  CHECK(spectrum(shift(), SpectrumKind::Right) == closed_unit_disk());
  CHECK(spectrum(shift(), SpectrumKind::Essential) == unit_circle());
  CHECK(spectrum(shift(), SpectrumKind::UpperBrowder) == unit_circle());
  CHECK(spectrum(shift(), SpectrumKind::Browder) == closed_unit_disk());
}

TEST_CASE("spectra of finite blocks are empty or points by the paper's classes") {
  // J₃ is Browder (finite asc = des), so σ_b is empty while σ = {0}
  CHECK(spectrum(jordan(3), SpectrumKind::Sigma) == Region({RegionCell::point(zero)}));
  CHECK(spectrum(jordan(3), SpectrumKind::Browder).is_empty());
  CHECK(spectrum(jordan(3), SpectrumKind::Essential).is_empty());
  // amplified, the eigenvalue stops being Fredholm
  CHECK(spectrum(amplify(jordan(3)), SpectrumKind::Browder) ==
        Region({RegionCell::point(zero)}));
}

TEST_CASE("spectrum of the bilateral shift is its circle") {
  for (SpectrumKind k : {SpectrumKind::Sigma, SpectrumKind::Essential,
                         SpectrumKind::Browder, SpectrumKind::UpperBrowder})
    CHECK(spectrum(bilateral(), k) == unit_circle());
}

TEST_CASE("spectrum with loops adds isolated eigenvalues") {
  ExprPtr e = direct_sum({shift(), diag({{GQ(2), ExtNat(3)}})});
  Region sigma = spectrum(e, SpectrumKind::Sigma);
  CHECK(member(GQ(2), sigma));
  CHECK(sigma == region_union(closed_unit_disk(), Region({RegionCell::point(GQ(2))})));
  // finite multiplicity: Browder spectrum does not see the eigenvalue
  CHECK(spectrum(e, SpectrumKind::Browder) == closed_unit_disk());
  // infinite multiplicity: it stays
  ExprPtr e2 = direct_sum({shift(), diag({{GQ(2), ext_inf()}})});
  CHECK(member(GQ(2), spectrum(e2, SpectrumKind::Browder)));
}

TEST_CASE("tri-block spectra: witness-free works, nonzero witness is rejected") {
  ExprPtr a = shift();
  ExprPtr b = bshift();
  ExprPtr zero_c = tri_block(a, WitnessMap{}, b);
  CHECK(spectrum(zero_c, SpectrumKind::Sigma) == closed_unit_disk());
  WitnessMap w =
      resolve_witness(lower_to_graph(a), lower_to_graph(b), {{1, 1, GQ(1)}}, false);
  ExprPtr m = assemble_block(a, w, b);
  CHECK_THROWS_AS((void)spectrum(m, SpectrumKind::Sigma), Error);
  CHECK_THROWS_AS((void)signature_at(m, GQ::from_ratio(1, 2)), Error);
  // λ = 0 stays available through the census
  CHECK(classify_signature(signature_at(m, zero).sig).invertible);
}

TEST_CASE("completion spectra on the catalog") {
  CHECK(completion_spectrum(MeetKind::Sigma, shift(), shift()) == closed_unit_disk());
  CHECK(completion_spectrum(MeetKind::Browder, shift(), bshift()) == unit_circle());
  CHECK(completion_spectrum(MeetKind::UpperBrowder, shift(), shift()) == unit_circle());
  CHECK(completion_spectrum(MeetKind::Sigma, shift(), bshift()) == unit_circle());
  // (U*, U): nothing can be repaired, the meet is the whole closed disk
  CHECK(completion_spectrum(MeetKind::Sigma, bshift(), shift()) == closed_unit_disk());
}

TEST_CASE("completion spectrum with an off-circle eigenvalue in A") {
  // A = U ⊕ J₂ gains an eigenvalue at 0, but remains upper semi-Browder
  // there, so the Browder meet with U* is still just the circle.
  ExprPtr a = direct_sum({shift(), jordan(2)});
  CHECK(completion_spectrum(MeetKind::Browder, a, bshift()) == unit_circle());
  // σ-meet: at λ=0, α(B)=1 ≠ β(A)=2, and A is not left invertible: {0} joins
  Region s = completion_spectrum(MeetKind::Sigma, a, bshift());
  CHECK(s == region_union(unit_circle(), Region({RegionCell::point(zero)})));
}

TEST_CASE("pointwise Browder-meet forms agree") {
  ExprPtr a = direct_sum({shift(), jordan(2)});
  ExprPtr b = bshift(GQ(2));
  for (const GQ& z : spots)
    CHECK(completion_member(MeetKind::Browder, a, b, z) ==
          completion_member_dimension_form(a, b, z));
}
