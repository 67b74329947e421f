#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msslab/universe.hpp"

namespace msslab {

enum class Status {
  Holds,
  Fails,
  Vacuous,      ///< implication whose antecedent never fired
  Deferred,     ///< a slot the check needs is not bound
  Unspecified,  ///< named but has no statement to evaluate
};

std::string to_string(Status s);

/// True for Holds and Vacuous.
inline bool satisfied(Status s) { return s == Status::Holds || s == Status::Vacuous; }

/// A tuple of subsets bound to named variables.
struct Witness {
  std::vector<std::string> variables;
  std::vector<Subset> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of checking one axiom or claim.
///
/// `witnesses` holds counterexamples (non-empty iff status is Fails).
/// `evidence` holds supporting tuples for existential sub-claims.
struct Verdict {
  std::string axiom;
  Status status = Status::Holds;
  std::vector<Witness> witnesses;
  std::vector<Witness> evidence;
  std::uint64_t instances_checked = 0;
  bool sampled = false;
  std::optional<std::uint64_t> seed;
  std::string note;
};

/// Knobs shared by every quantified check.
struct CheckOptions {
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  /// Number of random instances drawn when a check is sampled.
  std::uint64_t sample_budget = 1'000'000;
  /// Universes up to this size are always checked exhaustively. Larger ones
  /// are checked exhaustively only while the instance space fits the budget.
  std::size_t exhaustive_max_universe = 4;
};

Verdict deferred_verdict(std::string axiom, std::string missing);

}  // namespace msslab
