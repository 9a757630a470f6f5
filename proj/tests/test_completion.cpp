#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/completion.hpp"
#include "samop/errors.hpp"
#include "samop/invariants.hpp"

using namespace samop;

TEST_CASE("left-invertible completion of (U, U)") {
  // α(B) = 0 ≤ β(A) = 1
  CompletionVerdict v = decide_complete(CompletionKind::LeftInvertible, shift(), shift());
  CHECK(v.possible);
  REQUIRE(v.assembled);
  CHECK(classify(v.assembled).left_invertible);
}

TEST_CASE("left-invertible completion needs capacity") {
  // α(B) = 2 > β(A) = 1
  ExprPtr b = direct_sum({bshift(), bshift()});
  CompletionVerdict v = decide_complete(CompletionKind::LeftInvertible, shift(), b);
  CHECK(!v.possible);
  // with β(A) = 2 it works again
  ExprPtr a2 = direct_sum({shift(), shift()});
  CHECK(decide_complete(CompletionKind::LeftInvertible, a2, b).possible);
}

TEST_CASE("upper semi-Browder completion: Theorem 2.3 branches") {
  // B ∉ Φ₊ and s_mul(A) finite: impossible
  CompletionVerdict v1 =
      decide_complete(CompletionKind::UpperBrowder, shift(), amplify(bshift()));
  CHECK(!v1.possible);
  // B ∉ Φ₊ but s_mul(A) = ∞: possible
  CompletionVerdict v2 =
      decide_complete(CompletionKind::UpperBrowder, amplify(shift()), amplify(bshift()));
  CHECK(v2.possible);
  REQUIRE(v2.assembled);
  ChainCensus c = chain_census(v2.assembled);
  CHECK(c.bi_infinite == ext_inf());
  CHECK(c.forward_rays == ext_inf());  // interleaving leaves unpaired rays
  CHECK(classify(v2.assembled).upper_semi_browder);
  // B ∈ Φ₊: need b.s_mul(B) ≤ s_mul(A)
  CompletionVerdict v3 = decide_complete(CompletionKind::UpperBrowder, shift(), bshift());
  CHECK(v3.possible);
  CompletionVerdict v4 = decide_complete(
      CompletionKind::UpperBrowder, shift(), direct_sum({bshift(), bshift()}));
  CHECK(!v4.possible);  // 2 > 1
}

TEST_CASE("lower semi-Browder completion is the dual") {
  CompletionVerdict v = decide_complete(CompletionKind::LowerBrowder, shift(), bshift());
  CHECK(v.possible);
  CHECK(classify(v.assembled).lower_semi_browder);
  // A ∉ Φ₋ needs b.s_mul(B) = ∞
  CompletionVerdict v2 =
      decide_complete(CompletionKind::LowerBrowder, amplify(shift()), bshift());
  CHECK(!v2.possible);
  CompletionVerdict v3 =
      decide_complete(CompletionKind::LowerBrowder, amplify(shift()), amplify(bshift()));
  CHECK(v3.possible);
  ChainCensus c = chain_census(v3.assembled);
  CHECK(c.forward_rays == ExtNat(0));
  CHECK(c.backward_rays == ext_inf());
}

TEST_CASE("Browder completion of (U, U*): the canonical bilateral witness") {
  CompletionVerdict v = decide_complete(CompletionKind::Browder, shift(), bshift());
  CHECK(v.possible);
  REQUIRE(v.witness);
  ChainCensus c = chain_census(v.assembled);
  CHECK(c.bi_infinite == ExtNat(1));
  CHECK(c.forward_rays == ExtNat(0));
  CHECK(c.backward_rays == ExtNat(0));
  CHECK(classify(v.assembled).invertible);  // invertible, hence Browder
  CHECK(classify(v.assembled).browder);
}

TEST_CASE("Browder completion needs equal multiplicities") {
  CHECK(!decide_complete(CompletionKind::Browder, shift(), bshift(GQ(1), GQ(3))).possible);
  ExprPtr a = direct_sum({shift(), shift()});
  CHECK(!decide_complete(CompletionKind::Browder, a, bshift()).possible);
  ExprPtr b2 = direct_sum({bshift(), bshift()});
  CompletionVerdict v = decide_complete(CompletionKind::Browder, a, b2);
  CHECK(v.possible);
  ChainCensus c = chain_census(v.assembled);
  CHECK(c.bi_infinite == ExtNat(2));
  CHECK(classify(v.assembled).browder);
}

TEST_CASE("Browder completion with infinite equal multiplicities") {
  ExprPtr a = amplify(shift());
  ExprPtr b = amplify(bshift());
  CompletionVerdict v = decide_complete(CompletionKind::Browder, a, b);
  CHECK(v.possible);
  ChainCensus c = chain_census(v.assembled);
  // the bijective pairing consumes both sides completely
  CHECK(c.forward_rays == ExtNat(0));
  CHECK(c.backward_rays == ExtNat(0));
  CHECK(c.bi_infinite == ext_inf());
  CHECK(classify(v.assembled).browder);
}

TEST_CASE("Browder completion, uneven group shapes") {
  // two infinite backward-ray groups against one infinite forward-ray group
  ExprPtr a = amplify(shift());
  ExprPtr b = direct_sum({amplify(bshift()), amplify(bshift())});
  CompletionVerdict v = decide_complete(CompletionKind::Browder, a, b);
  CHECK(v.possible);
  ChainCensus c = chain_census(v.assembled);
  CHECK(c.forward_rays == ExtNat(0));
  CHECK(c.backward_rays == ExtNat(0));
  CHECK(classify(v.assembled).browder);
  // and the mirror shape
  ExprPtr a2 = direct_sum({amplify(shift()), amplify(shift())});
  ExprPtr b2 = amplify(bshift());
  CompletionVerdict v2 = decide_complete(CompletionKind::Browder, a2, b2);
  CHECK(v2.possible);
  ChainCensus c2 = chain_census(v2.assembled);
  CHECK(c2.forward_rays == ExtNat(0));
  CHECK(c2.backward_rays == ExtNat(0));
  CHECK(classify(v2.assembled).browder);
  // finite groups mixed in
  ExprPtr a3 = direct_sum({shift(), amplify(shift())});
  ExprPtr b3 = direct_sum({bshift(), amplify(bshift())});
  CompletionVerdict v3 = decide_complete(CompletionKind::Browder, a3, b3);
  CHECK(v3.possible);
  CHECK(classify(v3.assembled).browder);
}

TEST_CASE("jordan heads survive the completion") {
  ExprPtr a = direct_sum({jordan(2), shift()});
  ExprPtr b = direct_sum({jordan(3), bshift()});
  CompletionVerdict v = decide_complete(CompletionKind::Browder, a, b);
  CHECK(v.possible);
  ChainCensus c = chain_census(v.assembled);
  CHECK(c.finite_chains.at(2) == ExtNat(1));
  CHECK(c.finite_chains.at(3) == ExtNat(1));
  CHECK(c.bi_infinite == ExtNat(1));
  CHECK(classify(v.assembled).browder);
}

TEST_CASE("construct_witness refuses impossible targets") {
  CHECK_THROWS_AS((void)construct_witness(CompletionKind::Browder, shift(), shift()),
                  Error);
}

TEST_CASE("verdict carries the clause that fired") {
  CompletionVerdict v =
      decide_complete(CompletionKind::UpperBrowder, shift(), amplify(bshift()));
  CHECK(v.rule.find("Φ₊") != std::string::npos);
  CHECK(!v.possible);
}
