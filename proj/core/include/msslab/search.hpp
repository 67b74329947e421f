#pragma once

// Enumeration of small structures and search for structures that satisfy or
// violate chosen axioms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msslab/delta.hpp"
#include "msslab/granulation.hpp"
#include "msslab/mss.hpp"

namespace msslab {

enum class StructureFamily { Relations, ExtensionalDeltas, Granulations };

std::string to_string(StructureFamily f);
std::optional<StructureFamily> structure_family_from_string(const std::string& s);

struct SearchSpec {
  std::size_t n = 2;
  StructureFamily family = StructureFamily::Relations;
  /// δ builder for the relation and granulation families.
  DeltaKind delta = DeltaKind::E1;
  std::vector<std::string> required;
  std::vector<std::string> forbidden;
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 0;
  /// Probability of each pair / granule / triple in sampled draws.
  double density = 0.5;
  /// Ask for exhaustive enumeration where the family allows it.
  bool exhaustive = true;
};

/// Largest universe on which all relations are enumerated.
inline constexpr std::size_t kMaxExhaustiveRelationUniverse = 3;

struct GeneratedStructure {
  std::uint64_t index = 0;
  MssStructure structure;
  std::optional<BinaryRelation> relation;
};

/// Deterministic stream of assembled structures for a search spec.
///
/// Relations and granulation families build granular operators, γ and the
/// requested δ. The extensional family pairs the discrete granulation with a
/// δ table; tables are enumerated for n = 1 and sampled otherwise.
class StructureStream {
 public:
  /// Throws BudgetError when an exhaustive request does not fit the budget.
  explicit StructureStream(SearchSpec spec);

  std::optional<GeneratedStructure> next();
  /// Number of structures the stream will yield.
  std::uint64_t total() const noexcept { return total_; }
  bool exhaustive() const noexcept { return exhaustive_; }

 private:
  GeneratedStructure build(std::uint64_t index) const;

  SearchSpec spec_;
  bool exhaustive_ = true;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
};

/// Structures enumerated for a spec, materialized.
std::vector<GeneratedStructure> enumerate_structures(const SearchSpec& spec);

struct SearchResult {
  std::optional<GeneratedStructure> witness;
  std::uint64_t examined = 0;
  bool exhaustive = true;
};

/// First structure (in stream order) where every required axiom is satisfied
/// and every forbidden axiom fails. Throws ConfigurationError for unknown ids.
SearchResult find_witness(const SearchSpec& spec, const VerifyOptions& opt = {});

}  // namespace msslab
