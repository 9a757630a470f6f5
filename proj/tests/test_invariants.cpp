#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/errors.hpp"
#include "samop/graph.hpp"
#include "samop/invariants.hpp"

using namespace samop;

TEST_CASE("unilateral shift signature") {
  FredholmSignature s = signature(shift());
  CHECK(s.alpha == ExtNat(0));
  CHECK(s.beta == ExtNat(1));
  CHECK(s.range_closed);
  CHECK(s.asc == ExtNat(0));
  CHECK(s.des == ext_inf());
  CHECK(s.smul == ExtNat(1));
  CHECK(s.bsmul == ExtNat(0));
  FredholmClass c = classify(shift());
  CHECK(c.left_invertible);
  CHECK(c.upper_semi_browder);
  CHECK(c.shift_like);
  CHECK(!c.right_invertible);
}

TEST_CASE("backward shift mirrors it") {
  FredholmSignature s = signature(bshift());
  CHECK(s.alpha == ExtNat(1));
  CHECK(s.beta == ExtNat(0));
  CHECK(s.asc == ext_inf());
  CHECK(s.des == ExtNat(0));
  CHECK(s.smul == ExtNat(0));
  CHECK(s.bsmul == ExtNat(1));
}

TEST_CASE("kernel growth sequences") {
  auto [a, b] = kernel_growth(shift());
  for (std::uint64_t k = 1; k <= 5; ++k) {
    CHECK(a.eval(k) == ExtNat(0));
    CHECK(b.eval(k) == ExtNat(k));  // β(Uᵏ) = k
  }
  auto [aj, bj] = kernel_growth(jordan(3));
  for (std::uint64_t k = 1; k <= 5; ++k) {
    CHECK(aj.eval(k) == ExtNat(std::min<std::uint64_t>(k, 3)));
    CHECK(bj.eval(k) == aj.eval(k));
  }
}

TEST_CASE("Example 1.3: not semi-Fredholm with both dimensions infinite") {
  ExprPtr t = direct_sum({amplify(bshift()), amplify(shift())});
  auto [a, b] = kernel_growth(t);
  CHECK(a.eval(1) == ext_inf());
  CHECK(b.eval(1) == ext_inf());
  FredholmSignature s = signature(t);
  CHECK(s.alpha == ext_inf());
  CHECK(s.beta == ext_inf());
  FredholmClass c = classify(t);
  CHECK(!c.semi_fredholm);
  // but each summand alone is fine
  FredholmClass c1 = classify(amplify(bshift()));
  CHECK(c1.right_invertible);
  CHECK(c1.backward_shift_like);
  FredholmClass c3 = classify(amplify(shift()));
  CHECK(c3.left_invertible);
  CHECK(c3.shift_like);
}

TEST_CASE("amplified backward shift has infinite kernel") {
  CHECK(signature(amplify(bshift())).alpha == ext_inf());
  CHECK(signature(amplify(bshift())).asc == ext_inf());
}

TEST_CASE("samuel multiplicities") {
  auto [s1, b1] = samuel_multiplicities(shift());
  CHECK(s1 == ExtNat(1));
  CHECK(b1 == ExtNat(0));
  auto [s2, b2] = samuel_multiplicities(power(bshift(), 4));
  CHECK(s2 == ExtNat(0));
  CHECK(b2 == ExtNat(4));
  auto [s3, b3] = samuel_multiplicities(direct_sum({shift(), bshift()}));
  CHECK(s3 == ExtNat(1));
  CHECK(b3 == ExtNat(1));
}

TEST_CASE("jordan blocks are Browder") {
  FredholmSignature s = signature(jordan(4));
  CHECK(s.alpha == ExtNat(1));
  CHECK(s.beta == ExtNat(1));
  CHECK(s.asc == ExtNat(4));
  CHECK(s.des == ExtNat(4));
  CHECK(classify(jordan(4)).browder);
  CHECK(classify(jordan(4)).stationary);
}

TEST_CASE("index identity where subtraction is defined") {
  ExprPtr es[] = {shift(),
                  bshift(),
                  jordan(3),
                  direct_sum({shift(), bshift()}),
                  power(bshift(), 4),
                  direct_sum({power(shift(), 2), jordan(2)}),
                  amplify(shift())};
  for (const ExprPtr& e : es) {
    FredholmSignature s = signature(e);
    auto lhs = s.bsmul.checked_sub(s.smul);
    auto rhs = s.alpha.checked_sub(s.beta);
    if (lhs && rhs) CHECK(*lhs == *rhs);
    auto lhs2 = s.smul.checked_sub(s.bsmul);
    auto rhs2 = s.beta.checked_sub(s.alpha);
    if (lhs2 && rhs2) CHECK(*lhs2 == *rhs2);
  }
}

TEST_CASE("translated atoms at zero go through the analytic rows") {
  // I + U: 0 sits on circle(−1, 1)'s translate — range not closed
  FredholmSignature s = signature(shift(GQ(1), GQ(1)));
  CHECK(s.alpha == ExtNat(0));
  CHECK(s.beta == ext_inf());
  CHECK(!s.range_closed);
  // 2I + U: invertible at zero
  CHECK(classify(shift(GQ(1), GQ(2))).invertible);
  // (1/2)I + U: inside the circle, behaves like a shift
  FredholmSignature in = signature(shift(GQ(1), GQ::from_ratio(1, 2)));
  CHECK(in.beta == ExtNat(1));
  CHECK(in.smul == ExtNat(1));
  // powers of translated atoms at zero
  FredholmSignature p = signature(power(shift(GQ(1), GQ::from_ratio(1, 2)), 3));
  CHECK(p.beta == ExtNat(3));
  CHECK(p.smul == ExtNat(3));
}

TEST_CASE("normal form partitions the census") {
  ExprPtr e = direct_sum({bshift(), shift(), jordan(2)});
  NormalForm3 nf = normal_form(e);
  CHECK(nf.ind_t1 == ExtNat(1));
  CHECK(nf.neg_ind_t2 == ExtNat(1));
  CHECK(nf.h3_dim == 2);
  CHECK(nf.t1.backward_rays == ExtNat(1));
  CHECK(nf.t2.forward_rays == ExtNat(1));
  CHECK(nf.t3.finite_chains.at(2) == ExtNat(1));
  // reconstruction audit
  ChainCensus rebuilt;
  rebuilt.add(nf.t1);
  rebuilt.add(nf.t2);
  rebuilt.add(nf.t3);
  CHECK(rebuilt == chain_census(e));
}

TEST_CASE("normal form of the shift alone") {
  NormalForm3 nf = normal_form(shift());
  CHECK(nf.ind_t1 == ExtNat(0));
  CHECK(nf.neg_ind_t2 == ExtNat(1));
  CHECK(nf.h3_dim == 0);
}

TEST_CASE("normal form rejects Example 1.3") {
  ExprPtr t = direct_sum({amplify(bshift()), amplify(shift())});
  CHECK_THROWS_AS((void)normal_form(t), Error);
}

TEST_CASE("upper semi-Browder decomposition") {
  UpperBrowderDecomp d = decompose_upper_browder(direct_sum({jordan(2), shift()}));
  CHECK(d.h1_dim == 2);
  CHECK(d.beta_t2 == ExtNat(1));
  CHECK(d.left_inv_part.forward_rays == ExtNat(1));
  UpperBrowderDecomp d2 = decompose_upper_browder(shift());
  CHECK(d2.h1_dim == 0);
  CHECK_THROWS_AS((void)decompose_upper_browder(bshift()), Error);
}

TEST_CASE("lower semi-Browder decomposition") {
  LowerBrowderDecomp d = decompose_lower_browder(direct_sum({jordan(3), bshift()}));
  CHECK(d.h2_dim == 3);
  CHECK(d.alpha_t1 == ExtNat(1));
  LowerBrowderDecomp d2 = decompose_lower_browder(bshift());
  CHECK(d2.h2_dim == 0);
  CHECK_THROWS_AS((void)decompose_lower_browder(shift()), Error);
}

TEST_CASE("adjoint duality of signatures") {
  ExprPtr es[] = {shift(), jordan(3), direct_sum({shift(), shift(), bshift()}),
                  amplify(jordan(2)), power(bshift(), 2),
                  diag({{GQ(0), ExtNat(2)}, {GQ(1), ExtNat(1)}})};
  for (const ExprPtr& e : es) {
    FredholmSignature s = signature(e);
    FredholmSignature a = signature(adjoint(e));
    CHECK(a.alpha == s.beta);
    CHECK(a.beta == s.alpha);
    CHECK(a.asc == s.des);
    CHECK(a.des == s.asc);
    CHECK(a.smul == s.bsmul);
    CHECK(a.bsmul == s.smul);
  }
}

TEST_CASE("mixed trimatrix evaluates at zero without a graph") {
  DenseMat m(3, 3);
  m << GQ(0), GQ(1), GQ(0),
       GQ(0), GQ(0), GQ(0),
       GQ(0), GQ(0), GQ(2);
  // Jordan cell of size 2 at 0  ⊕  invertible 1×1
  ExprPtr e = trimatrix(m);
  CHECK(!graph_expressible(e));
  FredholmSignature s = signature(e);
  CHECK(s.alpha == ExtNat(1));
  CHECK(s.beta == ExtNat(1));
  CHECK(s.asc == ExtNat(2));
  CHECK(classify(e).browder);
  NormalForm3 nf = normal_form(e);
  CHECK(nf.h3_dim == 2);
}

TEST_CASE("tri-block signature goes through the census") {
  ExprPtr a = shift();
  ExprPtr b = bshift();
  WitnessMap w =
      resolve_witness(lower_to_graph(a), lower_to_graph(b), {{1, 1, GQ(1)}}, false);
  ExprPtr m = assemble_block(a, w, b);
  CHECK(classify(m).invertible);
}
