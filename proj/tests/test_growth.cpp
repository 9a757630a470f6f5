#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "samop/growth.hpp"

using namespace samop;

namespace {
GrowthSeq min_k(long long n) {
  // s(k) = min(k, n)
  std::vector<ExtNat> prefix;
  for (long long k = 1; k < n; ++k) prefix.push_back(ExtNat(k));
  return GrowthSeq(prefix, ExtNat(0), ExtNat(n));
}
}  // namespace

TEST_CASE("slope of the shift growth") {
  // β(Uᵏ) = k
  CHECK(growth_slope(GrowthSeq::linear(ExtNat(1))) == ExtNat(1));
  // stabilized sequence min(k, 3)
  CHECK(growth_slope(min_k(3)) == ExtNat(0));
  // identically ∞ (Example 1.3 arithmetic)
  CHECK(growth_slope(GrowthSeq::constant(ext_inf())) == ext_inf());
}

TEST_CASE("evaluation and monotonicity") {
  GrowthSeq s = min_k(3);
  CHECK(s.eval(1) == ExtNat(1));
  CHECK(s.eval(2) == ExtNat(2));
  CHECK(s.eval(3) == ExtNat(3));
  CHECK(s.eval(100) == ExtNat(3));
  CHECK(s.monotone());
  GrowthSeq bad({ExtNat(5)}, ExtNat(0), ExtNat(1));
  CHECK(!bad.monotone());
}

TEST_CASE("pointwise addition") {
  GrowthSeq sum = growth_add(GrowthSeq::linear(ExtNat(1)), min_k(2));
  for (std::uint64_t k = 1; k <= 6; ++k)
    CHECK(sum.eval(k) == ExtNat(k) + ExtNat(std::min<std::uint64_t>(k, 2)));
  CHECK(growth_slope(sum) == ExtNat(1));
  // slope additivity with no ∞ entries
  GrowthSeq a = GrowthSeq::linear(ExtNat(2));
  GrowthSeq b = min_k(4);
  CHECK(growth_slope(growth_add(a, b)) == growth_slope(a) + growth_slope(b));
}

TEST_CASE("amplification") {
  // amplify(s ≡ 0) = s ≡ 0
  GrowthSeq zero = GrowthSeq::constant(ExtNat(0));
  CHECK(growth_amplify(zero) == zero);
  // amplify(s(k) = k) ≡ ∞: the α-sequence of countably many backward shifts
  GrowthSeq amp = growth_amplify(GrowthSeq::linear(ExtNat(1)));
  for (std::uint64_t k = 1; k <= 5; ++k) CHECK(amp.eval(k) == ext_inf());
  CHECK(growth_slope(amp) == ext_inf());
  // pointwise rule on a mixed sequence
  GrowthSeq m = growth_amplify(min_k(2));
  CHECK(m.eval(1) == ext_inf());
  CHECK(growth_slope(m) == ext_inf());
}

TEST_CASE("stabilization index") {
  CHECK(stabilization_index(GrowthSeq::constant(ExtNat(0))) == ExtNat(0));
  CHECK(stabilization_index(GrowthSeq::constant(ExtNat(4))) == ExtNat(1));
  CHECK(stabilization_index(min_k(3)) == ExtNat(3));
  CHECK(stabilization_index(GrowthSeq::linear(ExtNat(1))) == ext_inf());
}

TEST_CASE("normalization trims redundant prefix entries") {
  GrowthSeq s({ExtNat(1), ExtNat(2), ExtNat(2)}, ExtNat(0), ExtNat(2));
  GrowthSeq t({ExtNat(1)}, ExtNat(0), ExtNat(2));
  CHECK(s == t);
}
