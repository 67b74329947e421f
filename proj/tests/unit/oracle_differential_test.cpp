#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "msslab/oracle.hpp"
#include "msslab/replay.hpp"
#include "msslab/validation.hpp"
#include "support.hpp"

namespace msslab {
namespace {

// Compares every covered axiom against the brute-force recomputation.
void expect_agreement(const MssStructure& s, const std::string& label) {
  for (const auto& v : verify(s)) {
    const auto o = oracle::recompute_axiom(s, v.axiom);
    if (!o) continue;
    ASSERT_EQ(v.status, o->status) << label << " " << v.axiom;
    if (v.status == Status::Fails) {
      ASSERT_TRUE(o->witness) << label << " " << v.axiom;
      ASSERT_EQ(v.witnesses.front(), *o->witness) << label << " " << v.axiom;
      ASSERT_EQ(replay_witness(s, v.axiom, v.witnesses.front()), true) << label << " " << v.axiom;
    }
  }
}

Clustering some_clustering(testing::Gen& gen, std::size_t n) {
  std::vector<Subset> cs;
  for (int k = 0; k < 3; ++k) {
    const Subset c = gen.subset(n);
    if (!c.is_empty() && std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
  }
  if (cs.empty()) cs.push_back(Subset::full(n));
  return Clustering(n, cs);
}

// Every relation on up to three elements, each built-in δ, with a granular
// sum and a random κ.
TEST(OracleDifferential, AllSmallRelations) {
  testing::Gen gen(17);
  int checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < count; ++code) {
      const BinaryRelation r = BinaryRelation::from_code(n, code);
      const Granulation g = predecessor_granulation(r);
      const OperatorSuite ops = OperatorSuite::granular(g);
      for (auto kind : {DeltaKind::E0, DeltaKind::E1, DeltaKind::E2, DeltaKind::UE1}) {
        // The full battery is slow-ish on three elements; thin out n = 3.
        if (n == 3 && gen.below(4) != 0) continue;
        MssComponents c = MssComponents::standard(Universe::numbered(n));
        c.operators = ops;
        c.granulation = g;
        c.delta = DeltaPredicate::builtin(kind, n, &ops);
        c.sum = gen.coin() ? SumOperation::granular_sum(g) : SumOperation::total_union(n);
        c.kappa = some_clustering(gen, n);
        expect_agreement(assemble(std::move(c)), "n=" + std::to_string(n) + " code=" + std::to_string(code));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(OracleDifferential, RandomTablesAndMaps) {
  testing::Gen gen(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen.below(2);
    MssComponents c = MssComponents::standard(Universe::numbered(n));
    const Granulation g = predecessor_granulation(close_relation(gen.relation(n), {true, false, false}));
    c.operators = OperatorSuite::granular(g);
    c.granulation = g;
    switch (gen.below(3)) {
      case 0: c.delta = DeltaPredicate::extensional(gen.table(n, 0.5)); break;
      case 1: c.delta = DeltaPredicate::def0(NearnessMap::union_map(n)); break;
      default: c.delta = DeltaPredicate::def0(NearnessMap::upper_union_map(*c.operators)); break;
    }
    std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> sum;
    for (std::uint64_t a = 0; a <= full_mask(n); ++a) {
      for (std::uint64_t b = 0; b <= full_mask(n); ++b) {
        if (gen.coin(0.6)) sum.emplace(std::make_pair(a, b), gen.subset(n));
      }
    }
    c.sum = SumOperation::extensional(n, std::move(sum));
    expect_agreement(assemble(std::move(c)), "random " + std::to_string(i));
  }
}

TEST(OracleDifferential, ExampleStructure) {
  for (auto kind : {DeltaKind::E0, DeltaKind::E1, DeltaKind::E2, DeltaKind::UE1}) {
    expect_agreement(testing::example_structure(kind, testing::example_clustering()), to_string(kind));
  }
}

TEST(OracleClaims, HoldOnGranularStructures) {
  testing::Gen gen(5);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + gen.below(5);
    const MssStructure s = testing::granular_from(gen.relation(n, 0.4), DeltaKind::E1);
    for (const char* claim : {"l-pre-valid-closed-form", "upper-additivity", "approximation-laws", "proposition-def2"}) {
      ASSERT_TRUE(oracle::oracle_check(s, claim)) << claim;
    }
  }
}

TEST(OracleClaims, OverlapCloserMatchesChecker) {
  const OperatorSuite ops = testing::example_ops();
  for (auto kind : {DeltaKind::E0, DeltaKind::E1, DeltaKind::E2, DeltaKind::UE1}) {
    const MssStructure s = testing::example_structure(kind, testing::example_clustering());
    const Verdict v = check_compatibility(testing::example_clustering(), *s.delta(), CompatibilityMode::overlap_closer());
    EXPECT_EQ(oracle::oracle_check(s, "overlap-closer"), satisfied(v.status)) << to_string(kind);
  }
  EXPECT_THROW(oracle::oracle_check(testing::example_structure(), "overlap-closer"), ConfigurationError);
  EXPECT_THROW(oracle::oracle_check(testing::example_structure(), "nope"), ConfigurationError);
}

}  // namespace
}  // namespace msslab
