#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/errors.hpp"
#include "samop/expr.hpp"

using namespace samop;

TEST_CASE("constructors validate their domains") {
  CHECK_THROWS_AS((void)jordan(0), Error);
  CHECK_THROWS_AS((void)shift(GQ(0)), Error);
  CHECK_THROWS_AS((void)power(shift(), 0), Error);
  CHECK_THROWS_AS((void)diag({}), Error);
  CHECK_THROWS_AS((void)diag({{GQ(1), ExtNat(1)}, {GQ(1), ExtNat(2)}}), Error);
  DenseMat low(2, 2);
  low << GQ(0), GQ(0), GQ(1), GQ(0);
  CHECK_THROWS_AS((void)trimatrix(low), Error);
}

TEST_CASE("adjoint swaps shifts and conjugates parameters") {
  ExprPtr u = shift();
  ExprPtr a = adjoint(u);
  CHECK(a->is<BackShiftNode>());
  CHECK(structurally_equal(adjoint(a), u));

  ExprPtr s = shift(GQ::from_ratio(1, 2, 1, 3), GQ::i());
  ExprPtr sa = adjoint(s);
  const auto* b = sa->get_if<BackShiftNode>();
  REQUIRE(b);
  CHECK(b->c == GQ::from_ratio(1, 2, -1, 3));
  CHECK(b->mu == -GQ::i());
}

TEST_CASE("adjoint of a Jordan block is the same block") {
  CHECK(structurally_equal(adjoint(jordan(3)), jordan(3)));
}

TEST_CASE("double adjoint normalizes away") {
  ExprPtr e = direct_sum({shift(), jordan(2)});
  ExprPtr aa = adjoint_node(adjoint_node(e));
  CHECK(structurally_equal(normalize_adjoints(aa), e));
}

TEST_CASE("adjoint distributes over sums, powers, amplification") {
  ExprPtr e = amplify(power(direct_sum({shift(), bshift()}), 2));
  ExprPtr a = adjoint(e);
  ExprPtr expect = amplify(power(direct_sum({bshift(), shift()}), 2));
  CHECK(structurally_equal(a, expect));
}

TEST_CASE("adjoint of a diagonal conjugates values") {
  ExprPtr d = diag({{GQ::i(), ExtNat(2)}, {GQ(3), ext_inf()}});
  ExprPtr da = adjoint(d);
  const auto* n = da->get_if<DiagNode>();
  REQUIRE(n);
  CHECK(n->entries.size() == 2);
  CHECK(n->entries[0].first == -GQ::i());
  CHECK(n->entries[1].first == GQ(3));
  CHECK(n->entries[1].second == ext_inf());
}

TEST_CASE("adjoint of tri-block is rejected") {
  ExprPtr t = tri_block(shift(), WitnessMap{}, bshift());
  CHECK_THROWS_AS((void)adjoint(t), Error);
}

TEST_CASE("dsl printing") {
  CHECK(to_dsl(shift()) == "shift");
  CHECK(to_dsl(bshift(GQ(2))) == "bshift(2)");
  CHECK(to_dsl(shift(GQ(1), GQ::i())) == "shift(1, i)");
  CHECK(to_dsl(amplify(bshift())) == "inf(bshift)");
  CHECK(to_dsl(direct_sum({amplify(bshift()), amplify(shift())})) ==
        "(inf(bshift) (+) inf(shift))");
  CHECK(to_dsl(power(shift(), 3)) == "shift^3");
  CHECK(to_dsl(power(direct_sum({shift(), jordan(2)}), 2)) ==
        "(shift (+) jordan(2))^2");
  CHECK(to_dsl(diag({{GQ(0), ExtNat(3)}, {GQ(2), ext_inf()}})) ==
        "diag{0: 3, 2: inf}");
}
