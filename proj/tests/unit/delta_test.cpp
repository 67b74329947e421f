#include <gtest/gtest.h>

#include "msslab/delta.hpp"
#include "msslab/replay.hpp"
#include "support.hpp"

namespace msslab {
namespace {

using testing::S;

Witness witness(std::vector<std::string> vars, std::vector<Subset> values) { return {std::move(vars), std::move(values)}; }

TEST(Delta, BuiltinDefinitions) {
  const auto e0 = DeltaPredicate::e0(4);
  const auto e1 = DeltaPredicate::e1(4);
  EXPECT_TRUE(eval_delta(e1, S({"x1"}), S({"x1", "x2"}), S({"x1", "x2", "x3"})));
  const Subset a = S({"x2"});
  const Subset b = S({"x1", "x4"});
  EXPECT_TRUE(e0(a, b, b));
  EXPECT_FALSE(e1(a, b, b));
  const auto e2 = DeltaPredicate::e2(testing::example_ops());
  EXPECT_TRUE(e2(S({"x1", "x2", "x3"}), S({"x1", "x2"}), S({"x4"})));
  const auto ue1 = DeltaPredicate::ue1(testing::example_ops());
  EXPECT_TRUE(ue1(S({"x1"}), S({"x2"}), S({"x3"})));  // both sides reach {x1,x2,x3}
  EXPECT_THROW(DeltaPredicate::builtin(DeltaKind::E2, 4, nullptr), ConfigurationError);
  EXPECT_THROW(DeltaPredicate::builtin(DeltaKind::UE1, 4, nullptr), ConfigurationError);
  EXPECT_EQ(DeltaPredicate::builtin(DeltaKind::E1, 4, nullptr).name(), "E1");
  EXPECT_THROW(e0(Subset(3, 1), S({}), S({})), StructuralError);
}

TEST(Delta, ExtensionalTable) {
  DeltaTable t(2);
  t.insert(Subset(2, 1), Subset(2, 2), Subset(2, 3));
  t.insert(Subset(2, 0), Subset(2, 0), Subset(2, 0));
  EXPECT_EQ(t.size(), 2U);
  EXPECT_TRUE(t.contains(Subset(2, 1), Subset(2, 2), Subset(2, 3)));
  EXPECT_FALSE(t.contains(Subset(2, 2), Subset(2, 1), Subset(2, 3)));
  const auto triples = t.triples();
  ASSERT_EQ(triples.size(), 2U);
  EXPECT_TRUE(triples[0][0].is_empty());
  EXPECT_THROW(DeltaTable(7), ConfigurationError);
  const auto d = DeltaPredicate::extensional(t);
  EXPECT_EQ(d.kind(), DeltaKind::Extensional);
  EXPECT_TRUE(d(Subset(2, 1), Subset(2, 2), Subset(2, 3)));
}

TEST(Sum, Modes) {
  const auto total = SumOperation::total_union(4);
  EXPECT_EQ(eval_sum(total, S({"x1"}), S({"x3"})), S({"x1", "x3"}));
  const auto gs = SumOperation::granular_sum(testing::example_granulation());
  EXPECT_FALSE(eval_sum(gs, S({"x1"}), S({"x3"})));
  EXPECT_EQ(eval_sum(gs, S({"x1", "x2"}), S({"x2", "x3"})), S({"x1", "x2", "x3"}));
  const auto ext = SumOperation::extensional(2, {{{1, 2}, Subset(2, 3)}});
  EXPECT_EQ(ext(Subset(2, 1), Subset(2, 2)), Subset(2, 3));
  EXPECT_FALSE(ext(Subset(2, 2), Subset(2, 1)));
  EXPECT_EQ(ext.name(), "extensional-partial");
}

// Coherence table on the example universe, all exhaustive.
TEST(Coherence, E0Table) {
  const auto e0 = DeltaPredicate::e0(4);
  const Verdict icoh = check_coherence(e0, CoherenceAxiom::ICoh);
  EXPECT_EQ(icoh.status, Status::Holds);
  EXPECT_FALSE(icoh.sampled);
  EXPECT_EQ(icoh.instances_checked, 256U);
  const Verdict icoh2 = check_coherence(e0, CoherenceAxiom::ICoh2);
  ASSERT_EQ(icoh2.status, Status::Fails);
  // Lex-least violation: a = b = ∅.
  EXPECT_EQ(icoh2.witnesses[0], witness({"a", "b"}, {S({}), S({})}));
}

TEST(Coherence, E1Table) {
  const auto e1 = DeltaPredicate::e1(4);
  EXPECT_EQ(check_coherence(e1, CoherenceAxiom::ICoh2).status, Status::Holds);
  EXPECT_EQ(check_coherence(e1, CoherenceAxiom::StrictNCoh).status, Status::Holds);
  const Verdict icoh = check_coherence(e1, CoherenceAxiom::ICoh);
  ASSERT_EQ(icoh.status, Status::Fails);
  EXPECT_EQ(icoh.witnesses[0], witness({"a", "b"}, {S({}), S({})}));
  const Verdict trans = check_coherence(e1, CoherenceAxiom::Trans1);
  ASSERT_EQ(trans.status, Status::Fails);
  EXPECT_EQ(trans.instances_checked, 65536U);
  EXPECT_EQ(trans.witnesses[0], witness({"a", "b", "c", "e"}, {S({}), S({"x1"}), S({"x1", "x2"}), S({})}));
}

// Non-minimal violations for E0/i-coh-2 and E1/trans-1 still replay; the
// verdict just reports the least one.
TEST(Coherence, NonMinimalWitnessesReplay) {
  const MssStructure e0 = testing::example_structure(DeltaKind::E0);
  EXPECT_EQ(replay_witness(e0, "i-coh-2", witness({"a", "b"}, {S({"x1"}), S({"x2"})})), true);
  const MssStructure e1 = testing::example_structure(DeltaKind::E1);
  EXPECT_EQ(replay_witness(e1, "trans-1",
                           witness({"a", "b", "c", "e"}, {S({"x1"}), S({"x1", "x2"}), S({"x1", "x2", "x3"}), S({"x1"})})),
            true);
  EXPECT_EQ(replay_witness(e1, "i-coh-2", witness({"a", "b"}, {S({"x1"}), S({"x2"})})), false);
}

TEST(Coherence, PositiveTrans1Reading) {
  const auto e1 = DeltaPredicate::e1(3);
  const Verdict v = check_coherence(e1, CoherenceAxiom::Trans1, {}, Trans1Reading::Positive);
  EXPECT_EQ(v.status, Status::Holds);  // proper inclusion composes
  EXPECT_FALSE(v.note.empty());
}

TEST(Coherence, EmptyTableIsVacuousForImplications) {
  const auto never = DeltaPredicate::extensional(DeltaTable(2));
  EXPECT_EQ(check_coherence(never, CoherenceAxiom::NCoh).status, Status::Vacuous);
  EXPECT_EQ(check_coherence(never, CoherenceAxiom::Trans1).status, Status::Vacuous);
  EXPECT_EQ(check_coherence(never, CoherenceAxiom::ICoh2).status, Status::Holds);
}

TEST(SumAxioms, E1WithTotalUnion) {
  const auto v = check_sum_axioms(DeltaPredicate::e1(4), SumOperation::total_union(4));
  ASSERT_EQ(v.size(), 6U);
  const std::vector<std::string> ids = {"omega*-com", "omega-id", "omega-asso", "delta-sum1", "delta-sum2", "delta-sum3"};
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v[i].axiom, ids[i]);
    EXPECT_TRUE(satisfied(v[i].status)) << v[i].axiom;
  }
}

TEST(SumAxioms, E0WithGranularSum) {
  const auto v = check_sum_axioms(DeltaPredicate::e0(4), SumOperation::granular_sum(testing::example_granulation()));
  for (const auto& x : v) EXPECT_TRUE(satisfied(x.status)) << x.axiom;
}

TEST(SumAxioms, FullTableWithTotalUnion) {
  DeltaTable full(2);
  for (const auto& a : lex_ordered_powerset(2)) {
    for (const auto& b : lex_ordered_powerset(2)) {
      for (const auto& c : lex_ordered_powerset(2)) full.insert(a, b, c);
    }
  }
  for (const auto& x : check_sum_axioms(DeltaPredicate::extensional(full), SumOperation::total_union(2))) {
    EXPECT_EQ(x.status, Status::Holds) << x.axiom;
  }
}

TEST(SumAxioms, NonCommutativeSumFails) {
  const auto s = SumOperation::extensional(1, {{{0, 1}, Subset(1, 1)}});
  const auto v = check_sum_laws(s);
  ASSERT_EQ(v[0].status, Status::Fails);
  EXPECT_EQ(v[0].witnesses[0].values, (std::vector<Subset>{Subset(1, 0), Subset(1, 1)}));
  EXPECT_EQ(v[1].status, Status::Vacuous);  // no a ⊕ a is defined
}

TEST(DefCompat, UnionMap) {
  const auto f = NearnessMap::union_map(4);
  EXPECT_EQ(check_def_compat(DeltaPredicate::e0(4), f, DefMode::Def0).status, Status::Holds);
  EXPECT_EQ(check_def_compat(DeltaPredicate::e1(4), f, DefMode::Def1).status, Status::Holds);
  const Verdict def2 = check_def_compat(DeltaPredicate::e1(4), f, DefMode::Def2);
  ASSERT_EQ(def2.status, Status::Fails);
  EXPECT_EQ(def2.witnesses[0].values, (std::vector<Subset>{S({}), S({}), S({})}));
  // a = b = c = {x1} is a counterexample too.
  const auto e1 = DeltaPredicate::e1(4);
  EXPECT_TRUE(part_of(f(S({"x1"}), S({"x1"})), f(S({"x1"}), S({"x1"}))));
  EXPECT_FALSE(e1(S({"x1"}), S({"x1"}), S({"x1"})));
}

TEST(DefCompat, NeverTrueDeltaIsVacuous) {
  const auto never = DeltaPredicate::extensional(DeltaTable(2));
  EXPECT_EQ(check_def_compat(never, NearnessMap::intersection_map(2), DefMode::Def1).status, Status::Vacuous);
}

TEST(DefCompat, Def0DeltaIsItsOwnBiconditional) {
  const auto f = NearnessMap::upper_union_map(testing::example_ops());
  const auto d = DeltaPredicate::def0(f);
  EXPECT_EQ(d.name(), "def0(" + f.name() + ")");
  EXPECT_EQ(check_def_compat(d, f, DefMode::Def0).status, Status::Holds);
}

TEST(NearnessMap, TableMustBeTotal) {
  EXPECT_THROW(NearnessMap::table(1, {{{0, 0}, Subset(1, 0)}}), ConfigurationError);
  std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> all;
  for (std::uint64_t a = 0; a < 2; ++a) {
    for (std::uint64_t b = 0; b < 2; ++b) all.emplace(std::make_pair(a, b), Subset(1, a & b));
  }
  EXPECT_EQ(NearnessMap::table(1, all)(Subset(1, 1), Subset(1, 1)), Subset(1, 1));
}

// Property: the lex-least witness does not depend on the thread count.
TEST(Coherence, WitnessIndependentOfJobs) {
  testing::Gen gen(21);
  for (int i = 0; i < 30; ++i) {
    const auto d = DeltaPredicate::extensional(gen.table(2, 0.3));
    for (auto ax : {CoherenceAxiom::ICoh, CoherenceAxiom::NCoh, CoherenceAxiom::Trans1}) {
      CheckOptions one;
      CheckOptions four;
      four.jobs = 4;
      const Verdict a = check_coherence(d, ax, one);
      const Verdict b = check_coherence(d, ax, four);
      ASSERT_EQ(a.status, b.status);
      ASSERT_EQ(a.witnesses, b.witnesses);
      ASSERT_EQ(a.instances_checked, b.instances_checked);
    }
  }
}

// Property: sampled checks are reproducible for a fixed seed.
TEST(Coherence, SampledChecksAreSeeded) {
  const auto e0 = DeltaPredicate::e0(12);
  CheckOptions opt;
  opt.sample_budget = 5000;
  opt.seed = 99;
  const Verdict a = check_coherence(e0, CoherenceAxiom::NCoh, opt);
  const Verdict b = check_coherence(e0, CoherenceAxiom::NCoh, opt);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(99));
  EXPECT_EQ(a.instances_checked, 5000U);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

}  // namespace
}  // namespace msslab
