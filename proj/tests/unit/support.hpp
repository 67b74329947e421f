#pragma once

// Shared fixtures and hand-rolled generators for the unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include "msslab/delta.hpp"
#include "msslab/granulation.hpp"
#include "msslab/mss.hpp"
#include "msslab/universe.hpp"

namespace msslab::testing {

inline Universe example_universe() { return Universe::numbered(4); }

// Tolerance generated by (x1,x2), (x2,x3).
inline BinaryRelation example_relation() {
  BinaryRelation gen(4, {{0, 1}, {1, 2}});
  return close_relation(gen, {true, true, false});
}

inline Granulation example_granulation() { return predecessor_granulation(example_relation()); }

inline OperatorSuite example_ops() { return OperatorSuite::granular(example_granulation()); }

inline Subset S(std::initializer_list<std::string_view> names) { return example_universe().subset(names); }

/// The example's structure with granular operators and γ; δ and κ optional.
inline MssStructure example_structure(std::optional<DeltaKind> delta = std::nullopt,
                                      std::optional<Clustering> kappa = std::nullopt) {
  MssComponents c = MssComponents::standard(example_universe());
  OperatorSuite ops = example_ops();
  if (delta) c.delta = DeltaPredicate::builtin(*delta, 4, &ops);
  c.operators = ops;
  c.granulation = example_granulation();
  c.kappa = std::move(kappa);
  return assemble(std::move(c));
}

inline Clustering example_clustering() {
  return Clustering(4, {S({"x1", "x3"}), S({"x2", "x3"}), S({"x2", "x4"})});
}

/// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  Subset subset(std::size_t n) { return {n, rng_() & full_mask(n)}; }

  BinaryRelation relation(std::size_t n, double density = 0.4) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (coin(density)) r.insert(x, y);
      }
    }
    return r;
  }

  DeltaTable table(std::size_t n, double density) {
    DeltaTable t(n);
    const std::uint64_t m = full_mask(n);
    for (std::uint64_t a = 0; a <= m; ++a) {
      for (std::uint64_t b = 0; b <= m; ++b) {
        for (std::uint64_t c = 0; c <= m; ++c) {
          if (coin(density)) t.insert(Subset(n, a), Subset(n, b), Subset(n, c));
        }
      }
    }
    return t;
  }

 private:
  std::mt19937_64 rng_;
};

/// Structure over numbered(n) with granular operators from `r`.
inline MssStructure granular_from(const BinaryRelation& r, std::optional<DeltaKind> delta = std::nullopt) {
  const std::size_t n = r.universe_size();
  MssComponents c = MssComponents::standard(Universe::numbered(n));
  Granulation g = predecessor_granulation(r);
  OperatorSuite ops = OperatorSuite::granular(g);
  if (delta) c.delta = DeltaPredicate::builtin(*delta, n, &ops);
  c.operators = std::move(ops);
  c.granulation = std::move(g);
  return assemble(std::move(c));
}

}  // namespace msslab::testing
