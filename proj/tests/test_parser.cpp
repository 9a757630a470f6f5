#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/errors.hpp"
#include "samop/generator.hpp"
#include "samop/graph.hpp"
#include "samop/invariants.hpp"
#include "samop/parser.hpp"

using namespace samop;

TEST_CASE("atoms and defaults") {
  CHECK(structurally_equal(parse_expression("shift"), shift()));
  CHECK(structurally_equal(parse_expression("shift(2)"), shift(GQ(2))));
  CHECK(structurally_equal(parse_expression("shift(1, i)"), shift(GQ(1), GQ::i())));
  CHECK(structurally_equal(parse_expression("bshift(1/2)"), bshift(GQ::from_ratio(1, 2))));
  CHECK(structurally_equal(parse_expression("jordan(3)"), jordan(3)));
  CHECK(structurally_equal(parse_expression("bilateral"), bilateral()));
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("3/5+4/5i") == GQ::from_ratio(3, 5, 4, 5));
  CHECK(parse_scalar("-i") == -GQ::i());
  CHECK(parse_scalar("2i") == GQ::from_ratio(0, 1, 2, 1));
  CHECK(parse_scalar("1-2/3i") == GQ::from_ratio(1, 1, -2, 3));
  CHECK(parse_scalar("0") == GQ(0));
  CHECK_THROWS_AS((void)parse_scalar("1/0"), Error);
}

TEST_CASE("combinators and precedence") {
  // Example 1.3
  ExprPtr t = parse_expression("inf(bshift) (+) inf(shift)");
  CHECK(structurally_equal(t, direct_sum({amplify(bshift()), amplify(shift())})));
  CHECK(structurally_equal(parse_expression("shift (+) jordan(2)"),
                           direct_sum({shift(), jordan(2)})));
  // ^ binds tighter than (+)
  CHECK(structurally_equal(parse_expression("shift^2 (+) bshift"),
                           direct_sum({power(shift(), 2), bshift()})));
  CHECK(structurally_equal(parse_expression("inf(shift)^2"), power(amplify(shift()), 2)));
  CHECK(structurally_equal(parse_expression("adj(shift)"), adjoint_node(shift())));
  CHECK(structurally_equal(parse_expression("(shift (+) bshift)^3"),
                           power(direct_sum({shift(), bshift()}), 3)));
}

TEST_CASE("diag and trimat literals") {
  ExprPtr d = parse_expression("diag{2: inf, 0: 3}");
  const auto* dn = d->get_if<DiagNode>();
  REQUIRE(dn);
  CHECK(dn->entries.size() == 2);
  CHECK(dn->entries[0].first == GQ(0));
  CHECK(dn->entries[0].second == ExtNat(3));
  CHECK(dn->entries[1].second == ext_inf());

  ExprPtr t = parse_expression("trimat[0, 1; 0, 0]");
  const auto* tn = t->get_if<TriMatrixNode>();
  REQUIRE(tn);
  CHECK(tn->m(0, 1) == GQ(1));
  CHECK_THROWS_AS((void)parse_expression("trimat[0, 1; 2, 0]"), Error);
}

TEST_CASE("arity and domain errors") {
  CHECK_THROWS_AS((void)parse_expression("jordan(0)"), Error);
  CHECK_THROWS_AS((void)parse_expression("shift(0)"), Error);
  CHECK_THROWS_AS((void)parse_expression("jordan(2"), Error);
  CHECK_THROWS_AS((void)parse_expression(""), Error);
  CHECK_THROWS_AS((void)parse_expression("unknown_op"), Error);
}

TEST_CASE("bindings") {
  DslProgram p = parse_program("A = shift (+) jordan(2); B = adj(A); A (+) B");
  CHECK(p.bindings.count("A") == 1);
  const auto* ds = p.expr->get_if<DirectSumNode>();
  REQUIRE(ds);
  CHECK(ds->parts.size() == 2);
  CHECK_THROWS_AS((void)parse_program("A = shift; B"), Error);
}

TEST_CASE("tri blocks with witnesses") {
  ExprPtr m = parse_expression("tri(shift, {1->1}, bshift)");
  CHECK(classify(m).invertible);
  ExprPtr z = parse_expression("tri(shift, {}, shift)");
  ChainCensus c = chain_census(z);
  CHECK(c.forward_rays == ExtNat(2));
  ExprPtr pr = parse_expression("tri(inf(shift), pair-rays, inf(bshift))");
  CHECK(chain_census(pr).bi_infinite == ext_inf());
  // duplicate source slot
  CHECK_THROWS_AS((void)parse_expression("tri(shift, {1->1, 1->1}, bshift)"), Error);
  // out-of-range slot
  CHECK_THROWS_AS((void)parse_expression("tri(shift, {2->1}, bshift)"), Error);
  // weighted pair
  ExprPtr wm = parse_expression("tri(shift, {1->1:1/2}, bshift)");
  CHECK(classify(wm).invertible);
}

TEST_CASE("round trip: print then parse") {
  CHECK(structurally_equal(parse_expression(to_dsl(shift(GQ(1), GQ::i()))),
                           shift(GQ(1), GQ::i())));
  Rng rng(7);
  GenOptions opt;
  opt.allow_translated = true;
  for (int i = 0; i < 200; ++i) {
    ExprPtr e = gen_expr(rng, opt);
    ExprPtr back = parse_expression(to_dsl(e));
    CHECK(structurally_equal(e, back));
  }
  // tri blocks round-trip through their explicit pair syntax
  ExprPtr m = parse_expression("tri(shift (+) jordan(2), {1->2, 2->1:i}, bshift (+) jordan(3))");
  CHECK(structurally_equal(parse_expression(to_dsl(m)), m));
  ExprPtr pr = parse_expression("tri(inf(shift), pair-rays, inf(bshift))");
  CHECK(structurally_equal(parse_expression(to_dsl(pr)), pr));
}
