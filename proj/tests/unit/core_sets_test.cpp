#include <gtest/gtest.h>

#include <algorithm>

#include "msslab/universe.hpp"
#include "support.hpp"

namespace msslab {
namespace {

using testing::Gen;
using testing::S;

TEST(Universe, RejectsMalformedNameLists) {
  EXPECT_THROW(Universe({}), StructuralError);
  EXPECT_THROW(Universe({"a", "b", "a"}), StructuralError);
  EXPECT_THROW(Universe::numbered(65), StructuralError);
  EXPECT_NO_THROW(Universe::numbered(64));
}

TEST(Universe, SubsetFromNames) {
  const Universe u = testing::example_universe();
  EXPECT_EQ(u.subset({"x1", "x3"}).bits(), 0b0101U);
  EXPECT_THROW(u.subset({"x5"}), StructuralError);
  EXPECT_EQ(u.format(u.subset({"x3", "x1"})), "{x1,x3}");
  EXPECT_EQ(u.format(u.empty()), "{}");
  EXPECT_EQ(u.names_of(u.full()), (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
}

TEST(Subset, ConstructionValidatesBits) {
  EXPECT_THROW(Subset(3, 0b1000), StructuralError);
  EXPECT_THROW(Subset::singleton(3, 3), StructuralError);
  EXPECT_EQ(Subset::of(4, {0, 2}).members(), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(Subset::full(64).is_full());
  EXPECT_EQ(Subset::full(64).count(), 64U);
}

TEST(Subset, Parthood) {
  EXPECT_TRUE(part_of(S({"x4"}), S({"x4"})));
  EXPECT_TRUE(part_of(S({"x1", "x3"}), S({"x1", "x2", "x3"})));
  EXPECT_FALSE(part_of(S({"x1", "x2"}), S({"x2", "x4"})));
  EXPECT_FALSE(proper_part_of(S({"x4"}), S({"x4"})));
  EXPECT_THROW(part_of(Subset(3, 1), Subset(4, 1)), StructuralError);
}

TEST(Subset, JoinMeetComplement) {
  EXPECT_EQ(join(S({"x1"}), S({"x3"})), S({"x1", "x3"}));
  EXPECT_EQ(meet(S({"x1", "x3"}), S({"x2", "x3"})), S({"x3"}));
  EXPECT_TRUE(meet(S({"x1"}), S({"x2"})).is_empty());
  EXPECT_EQ(complement(S({"x1", "x3"})), S({"x2", "x4"}));
  EXPECT_THROW(join(Subset(3, 1), Subset(4, 1)), StructuralError);
  EXPECT_THROW(meet(Subset(3, 1), Subset(4, 1)), StructuralError);
}

TEST(Subset, PartialDifference) {
  auto d = partial_difference(S({"x2", "x4"}), S({"x4"}));
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, S({"x2"}));
  EXPECT_FALSE(partial_difference(S({"x1"}), S({"x2"})));
  const Subset h = Subset::full(4);
  EXPECT_EQ(partial_difference(h, Subset::empty(4)), h);

  EXPECT_EQ(partial_difference(S({"x1"}), S({"x2"}), DifferencePolicy::Total), S({"x1"}));
  EXPECT_FALSE(partial_difference(S({"x1"}), S({"x1"}), DifferencePolicy::ProperContained));
  EXPECT_EQ(partial_difference(S({"x1", "x2"}), S({"x1"}), DifferencePolicy::ProperContained), S({"x2"}));
}

TEST(Subset, OmegaEqualities) {
  const PartialResult undef;
  const PartialResult x1 = S({"x1"});
  const PartialResult x2 = S({"x2"});
  EXPECT_TRUE(omega_equal(undef, x1));
  EXPECT_FALSE(omega_star_equal(undef, x1));
  EXPECT_TRUE(omega_equal(x1, x1));
  EXPECT_TRUE(omega_star_equal(x1, x1));
  EXPECT_FALSE(omega_equal(x1, x2));
  EXPECT_FALSE(omega_star_equal(x1, x2));
  EXPECT_TRUE(omega_equal(undef, undef));
  EXPECT_TRUE(omega_star_equal(undef, undef));
}

TEST(LexOrder, SmallUniverseSequence) {
  const auto ps = lex_ordered_powerset(3);
  const std::vector<std::uint64_t> expected = {0b000, 0b001, 0b011, 0b111, 0b101, 0b010, 0b110, 0b100};
  ASSERT_EQ(ps.size(), expected.size());
  for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(ps[i].bits(), expected[i]) << i;
  EXPECT_THROW(lex_ordered_powerset(25), BudgetError);
}

// Property: the closed-form comparison agrees with comparing member lists.
TEST(LexOrder, AgreesWithMemberListComparison) {
  Gen gen(11);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t n = 1 + gen.below(64);
    const Subset a = gen.coin(0.2) ? Subset::empty(n) : gen.subset(n);
    const Subset b = gen.coin(0.2) ? a : gen.subset(n);
    const auto ma = a.members();
    const auto mb = b.members();
    const bool expected = std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    ASSERT_EQ(lex_less(a, b), expected) << a.bits() << " " << b.bits() << " n=" << n;
  }
}

TEST(LexOrder, IsStrictTotalOrder) {
  const auto ps = lex_ordered_powerset(4);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_FALSE(lex_less(ps[i], ps[i]));
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      EXPECT_TRUE(lex_less(ps[i], ps[j]));
      EXPECT_FALSE(lex_less(ps[j], ps[i]));
    }
  }
}

// Property: Boolean algebra laws on random subsets.
TEST(SetAlgebra, BooleanLaws) {
  Gen gen(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + gen.below(64);
    const Subset a = gen.subset(n);
    const Subset b = gen.subset(n);
    const Subset c = gen.subset(n);
    ASSERT_EQ(join(a, b), join(b, a));
    ASSERT_EQ(meet(join(a, b), c), join(meet(a, c), meet(b, c)));
    ASSERT_EQ(complement(join(a, b)), meet(complement(a), complement(b)));
    ASSERT_EQ(complement(complement(a)), a);
    ASSERT_EQ(set_difference(a, b), meet(a, complement(b)));
    ASSERT_EQ(part_of(a, b), join(a, b) == b);
    ASSERT_EQ(partial_difference(a, b).has_value(), part_of(b, a));
  }
}

}  // namespace
}  // namespace msslab
