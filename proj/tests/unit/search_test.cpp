#include <gtest/gtest.h>

#include <set>

#include "msslab/search.hpp"
#include "support.hpp"

namespace msslab {
namespace {

SearchSpec spec(std::size_t n, StructureFamily f) {
  SearchSpec s;
  s.n = n;
  s.family = f;
  return s;
}

TEST(Enumeration, ExhaustiveCounts) {
  EXPECT_EQ(StructureStream(spec(2, StructureFamily::Relations)).total(), 16U);
  EXPECT_EQ(StructureStream(spec(3, StructureFamily::Relations)).total(), 512U);
  EXPECT_EQ(StructureStream(spec(1, StructureFamily::Granulations)).total(), 2U);
  EXPECT_EQ(StructureStream(spec(2, StructureFamily::Granulations)).total(), 8U);
  EXPECT_EQ(StructureStream(spec(1, StructureFamily::ExtensionalDeltas)).total(), 256U);
}

TEST(Enumeration, RelationsAreDistinctAndCarryGranularOps) {
  const auto all = enumerate_structures(spec(2, StructureFamily::Relations));
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (const auto& g : all) {
    ASSERT_TRUE(g.relation);
    seen.insert(g.relation->pairs());
    ASSERT_NE(g.structure.granulation(), nullptr);
    ASSERT_NE(g.structure.delta(), nullptr);
    EXPECT_EQ(g.structure.delta()->kind(), DeltaKind::E1);
  }
  EXPECT_EQ(seen.size(), 16U);
  EXPECT_EQ(all[0].index, 0U);
  EXPECT_EQ(all[15].index, 15U);
}

TEST(Enumeration, BudgetRefusals) {
  EXPECT_THROW(StructureStream(spec(4, StructureFamily::Relations)), BudgetError);
  SearchSpec s = spec(3, StructureFamily::Relations);
  s.budget = 100;
  EXPECT_THROW(StructureStream{s}, BudgetError);
  s.exhaustive = false;
  EXPECT_EQ(StructureStream(s).total(), 100U);
  EXPECT_FALSE(StructureStream(s).exhaustive());
  EXPECT_THROW(StructureStream(spec(0, StructureFamily::Relations)), ConfigurationError);
  EXPECT_THROW(StructureStream(spec(7, StructureFamily::ExtensionalDeltas)), ConfigurationError);
}

TEST(Enumeration, SampledStreamIsSeedDeterministic) {
  SearchSpec s = spec(4, StructureFamily::Relations);
  s.exhaustive = false;
  s.budget = 20;
  s.seed = 42;
  const auto a = enumerate_structures(s);
  const auto b = enumerate_structures(s);
  ASSERT_EQ(a.size(), 20U);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(*a[i].relation, *b[i].relation);
  s.seed = 43;
  const auto c = enumerate_structures(s);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(*a[i].relation == *c[i].relation);
  EXPECT_TRUE(differs);
}

TEST(FindWitness, StrictNCohImpliesICoh2) {
  // δabb → ¬δabb at b = c, so no table satisfies one and fails the other.
  SearchSpec s = spec(1, StructureFamily::ExtensionalDeltas);
  s.required = {"strict-n-coh"};
  s.forbidden = {"i-coh-2"};
  const SearchResult r = find_witness(s);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.examined, 256U);
  EXPECT_TRUE(r.exhaustive);
}

TEST(FindWitness, FirstStructureWhenAxiomAlwaysHolds) {
  SearchSpec s = spec(2, StructureFamily::Relations);
  s.delta = DeltaKind::E0;
  s.required = {"i-coh"};
  const SearchResult r = find_witness(s);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->index, 0U);
  EXPECT_EQ(r.examined, 1U);
}

TEST(FindWitness, TransOneNeverHoldsForE1) {
  SearchSpec s = spec(2, StructureFamily::Relations);
  s.required = {"trans-1"};
  const SearchResult r = find_witness(s);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.examined, 16U);
}

TEST(FindWitness, FindsTableSeparatingICohFromNCoh) {
  SearchSpec s = spec(1, StructureFamily::ExtensionalDeltas);
  s.required = {"i-coh"};
  s.forbidden = {"n-coh"};
  const SearchResult r = find_witness(s);
  ASSERT_TRUE(r.witness);
  const auto v = verify(r.witness->structure, {"i-coh", "n-coh"});
  EXPECT_EQ(v[0].status, Status::Holds);
  EXPECT_EQ(v[1].status, Status::Fails);
}

TEST(FindWitness, UnknownAxiom) {
  SearchSpec s = spec(2, StructureFamily::Relations);
  s.required = {"i-coh-3"};
  EXPECT_THROW(find_witness(s), ConfigurationError);
}

TEST(Families, NamesRoundTrip) {
  for (auto f : {StructureFamily::Relations, StructureFamily::ExtensionalDeltas, StructureFamily::Granulations}) {
    EXPECT_EQ(structure_family_from_string(to_string(f)), f);
  }
  EXPECT_FALSE(structure_family_from_string("lattices"));
}

}  // namespace
}  // namespace msslab
