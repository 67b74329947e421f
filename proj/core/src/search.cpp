#include "msslab/search.hpp"

#include <random>

#include "msslab/detail/quantify.hpp"

namespace msslab {

std::string to_string(StructureFamily f) {
  switch (f) {
    case StructureFamily::Relations: return "relations";
    case StructureFamily::ExtensionalDeltas: return "extensional-deltas";
    case StructureFamily::Granulations: return "granulations";
  }
  return "?";
}

std::optional<StructureFamily> structure_family_from_string(const std::string& s) {
  for (auto f : {StructureFamily::Relations, StructureFamily::ExtensionalDeltas, StructureFamily::Granulations}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

namespace {

std::uint64_t pow2_saturating(std::size_t e) {
  return e >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << e);
}

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(detail::splitmix64(seed ^ detail::splitmix64(index)));
}

MssStructure granular_structure(std::size_t n, Granulation g, const SearchSpec& spec) {
  MssComponents c = MssComponents::standard(Universe::numbered(n));
  OperatorSuite ops = OperatorSuite::granular(g);
  if (spec.family != StructureFamily::ExtensionalDeltas) {
    c.delta = DeltaPredicate::builtin(spec.delta, n, &ops);
  }
  c.operators = std::move(ops);
  c.granulation = std::move(g);
  return assemble(std::move(c));
}

}  // namespace

StructureStream::StructureStream(SearchSpec spec) : spec_(std::move(spec)) {
  if (spec_.n == 0) throw ConfigurationError("search universe must have at least one element");
  if (spec_.budget == 0) throw ConfigurationError("search budget must be positive");
  if (spec_.density < 0.0 || spec_.density > 1.0) throw ConfigurationError("density must lie in [0, 1]");
  const std::size_t n = spec_.n;
  switch (spec_.family) {
    case StructureFamily::Relations: {
      if (n > 8) throw ConfigurationError("relation family supports at most 8 elements");
      const std::uint64_t count = pow2_saturating(n * n);
      if (spec_.exhaustive) {
        if (n > kMaxExhaustiveRelationUniverse || count > spec_.budget) {
          throw BudgetError("exhaustive relation search on " + std::to_string(n) + " elements needs " +
                                std::to_string(count) + " structures",
                            count);
        }
        total_ = count;
      } else {
        exhaustive_ = false;
        total_ = spec_.budget;
      }
      break;
    }
    case StructureFamily::Granulations: {
      if (n > 5) throw ConfigurationError("granulation family supports at most 5 elements");
      const std::uint64_t count = pow2_saturating((std::size_t{1} << n) - 1);
      if (spec_.exhaustive) {
        if (count > spec_.budget) {
          throw BudgetError("exhaustive granulation search on " + std::to_string(n) + " elements needs " +
                                std::to_string(count) + " structures",
                            count);
        }
        total_ = count;
      } else {
        exhaustive_ = false;
        total_ = spec_.budget;
      }
      break;
    }
    case StructureFamily::ExtensionalDeltas: {
      if (n > DeltaTable::kMaxUniverse) {
        throw ConfigurationError("extensional deltas need a universe of at most " +
                                 std::to_string(DeltaTable::kMaxUniverse) + " elements");
      }
      if (spec_.exhaustive && n == 1) {
        total_ = 256;
        if (total_ > spec_.budget) throw BudgetError("exhaustive table search needs 256 structures", 256);
      } else {
        exhaustive_ = false;
        total_ = spec_.budget;
      }
      break;
    }
  }
}

GeneratedStructure StructureStream::build(std::uint64_t index) const {
  const std::size_t n = spec_.n;
  std::optional<BinaryRelation> relation;
  auto structure = [&]() -> MssStructure {
    switch (spec_.family) {
    case StructureFamily::Relations: {
      BinaryRelation r(n);
      if (exhaustive_) {
        r = BinaryRelation::from_code(n, index);
      } else {
        auto rng = rng_for(spec_.seed, index);
        std::bernoulli_distribution pick(spec_.density);
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (pick(rng)) r.insert(x, y);
          }
        }
      }
      relation = r;
      return granular_structure(n, predecessor_granulation(r), spec_);
    }
    case StructureFamily::Granulations: {
      // Bit k of the code selects the nonempty subset with bits k + 1.
      std::vector<Subset> granules;
      const std::uint64_t nonempty = full_mask(n);
      if (exhaustive_) {
        for (std::uint64_t k = 0; k < nonempty; ++k) {
          if ((index >> k) & 1U) granules.emplace_back(n, k + 1);
        }
      } else {
        auto rng = rng_for(spec_.seed, index);
        std::bernoulli_distribution pick(spec_.density);
        for (std::uint64_t k = 0; k < nonempty; ++k) {
          if (pick(rng)) granules.emplace_back(n, k + 1);
        }
      }
      return granular_structure(n, Granulation(n, std::move(granules)), spec_);
    }
    case StructureFamily::ExtensionalDeltas: {
      DeltaTable table(n);
      const std::uint64_t mask = full_mask(n);
      const std::uint64_t cells = std::uint64_t{1} << (3 * n);
      if (exhaustive_) {
        for (std::uint64_t i = 0; i < cells; ++i) {
          if ((index >> i) & 1U) table.insert(Subset(n, i & mask), Subset(n, (i >> n) & mask), Subset(n, (i >> (2 * n)) & mask));
        }
      } else {
        auto rng = rng_for(spec_.seed, index);
        std::bernoulli_distribution pick(spec_.density);
        for (std::uint64_t i = 0; i < cells; ++i) {
          if (pick(rng)) table.insert(Subset(n, i & mask), Subset(n, (i >> n) & mask), Subset(n, (i >> (2 * n)) & mask));
        }
      }
      MssStructure base = granular_structure(n, predecessor_granulation(BinaryRelation::diagonal(n)), spec_);
      return base.with_delta(DeltaPredicate::extensional(std::move(table)));
    }
    }
    throw ConfigurationError("unknown structure family");
  }();
  return {index, std::move(structure), std::move(relation)};
}

std::optional<GeneratedStructure> StructureStream::next() {
  if (cursor_ >= total_) return std::nullopt;
  return build(cursor_++);
}

std::vector<GeneratedStructure> enumerate_structures(const SearchSpec& spec) {
  StructureStream stream(spec);
  std::vector<GeneratedStructure> out;
  out.reserve(stream.total());
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

SearchResult find_witness(const SearchSpec& spec, const VerifyOptions& opt) {
  std::vector<std::string> ids;
  for (const auto* list : {&spec.required, &spec.forbidden}) {
    for (const auto& id : *list) {
      if (find_axiom(id) == nullptr) throw ConfigurationError("unknown axiom '" + id + "'");
      ids.push_back(id);
    }
  }
  StructureStream stream(spec);
  SearchResult result;
  result.exhaustive = stream.exhaustive();
  while (auto g = stream.next()) {
    ++result.examined;
    const auto verdicts = verify(g->structure, ids, opt);
    bool match = true;
    for (std::size_t i = 0; i < verdicts.size() && match; ++i) {
      const bool want_fail = i >= spec.required.size();
      match = want_fail ? verdicts[i].status == Status::Fails : satisfied(verdicts[i].status);
    }
    if (match) {
      result.witness = std::move(*g);
      break;
    }
  }
  return result;
}

}  // namespace msslab
