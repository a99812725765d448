#include <gtest/gtest.h>

#include "fideal/analysis.hpp"
#include "test_support.hpp"

namespace fideal {
namespace {

VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }

TEST(Analysis, Degree3ExampleIsFIdeal) {
  const SquareFreeIdeal i = testing::degree3_example();
  EXPECT_TRUE(is_f_ideal(i));
  const ConditionReport r = check_characterization(i);
  EXPECT_TRUE(r.necessary_conditions_pass());
  EXPECT_EQ(r.height->observed, 3);
  EXPECT_EQ(r.parity_count->binom, 20u);
  EXPECT_EQ(r.parity_count->associated_primes, 10);
  EXPECT_EQ(r.skeleton->observed, 15u);
  EXPECT_EQ(r.skeleton->expected, 15u);
  EXPECT_TRUE(*r.characterization_verdict);
  EXPECT_TRUE(r.direct_verdict);
  EXPECT_FALSE(r.theorem_violation());
}

TEST(Analysis, NonexamplePassesNecessaryConditionsOnly) {
  const SquareFreeIdeal i = testing::nonexample_5var();
  const ConditionReport r = check_necessary_conditions(i);
  EXPECT_TRUE(r.necessary_conditions_pass());
  EXPECT_EQ(r.height->observed, 2);
  EXPECT_EQ(r.parity_count->associated_primes, 5);
  EXPECT_FALSE(r.direct_verdict);
  EXPECT_EQ(r.f_facet, (FVector{{5, 9, 5}}));
  EXPECT_EQ(r.f_nonface, (FVector{{5, 10, 5}}));
  const ConditionReport c = check_characterization(i);
  EXPECT_FALSE(c.skeleton->pass);
  EXPECT_EQ(c.skeleton->observed, 9u);
  EXPECT_EQ(c.skeleton->expected, 10u);
  EXPECT_FALSE(*c.characterization_verdict);
  EXPECT_FALSE(is_f_ideal(i));
}

TEST(Analysis, PathOnFourVertices) {
  const SquareFreeIdeal i(4, {vs({1, 2}), vs({2, 3}), vs({3, 4})});
  EXPECT_TRUE(is_f_ideal(i));
  const ConditionReport r = check_characterization(i);
  EXPECT_TRUE(*r.characterization_verdict);
  EXPECT_EQ(r.parity_count->associated_primes, 3);
}

TEST(Analysis, PurityGate) {
  const SquareFreeIdeal mixed(3, {vs({1}), vs({2, 3})});
  EXPECT_THROW(check_characterization(mixed), NotPureError);
  EXPECT_THROW(check_necessary_conditions(mixed), NotPureError);
  EXPECT_NO_THROW(is_f_ideal(mixed));
  const SquareFreeIdeal linear(2, {vs({1}), vs({2})});
  EXPECT_THROW(check_characterization(linear), NotPureError);
  const SquareFreeIdeal partial(4, {vs({1, 2}), vs({2, 3})});
  EXPECT_THROW(check_characterization(partial), NotPureError);
  const ConditionReport r = analyze(mixed);
  EXPECT_FALSE(r.characterization_verdict.has_value());
  EXPECT_TRUE(r.direct_computed);
}

TEST(Analysis, FastModeTrustsCharacterization) {
  const ConditionReport r = analyze(testing::degree3_example(), {.trust_characterization = true});
  EXPECT_FALSE(r.direct_computed);
  EXPECT_TRUE(r.f_ideal());
}

// f(δ_F) = f(δ_N) = (5,10,5) although a cover of size 3 exists: the
// characterization's unmixedness and cover-count conditions are not
// necessary in degree 3.
TEST(Analysis, UnmixedFIdealCounterexample) {
  const SquareFreeIdeal i = testing::counterexample_5var();
  EXPECT_TRUE(is_f_ideal(i));
  const ConditionReport r = check_characterization(i);
  EXPECT_EQ(r.f_facet, (FVector{{5, 10, 5}}));
  EXPECT_EQ(r.f_nonface, (FVector{{5, 10, 5}}));
  EXPECT_FALSE(r.height->unmixed);
  EXPECT_EQ(r.parity_count->associated_primes, 6);
  EXPECT_TRUE(r.skeleton->pass);
  EXPECT_FALSE(*r.characterization_verdict);
  EXPECT_TRUE(r.theorem_violation());
}

}  // namespace
}  // namespace fideal
