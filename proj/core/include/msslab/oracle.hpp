#pragma once

// Brute-force re-derivations used to cross-check the optimized checkers.
//
// Nothing here calls into the checking code it validates: sets are plain
// boolean vectors, the powerset is generated recursively in lexicographic
// order, and approximations are recomputed from the raw granule list.

#include <optional>
#include <string>
#include <vector>

#include "msslab/mss.hpp"
#include "msslab/verdict.hpp"

namespace msslab::oracle {

/// Registered claim ids.
const std::vector<std::string>& claims();

/// Evaluates a named claim by direct enumeration. Throws ConfigurationError
/// for an unknown claim or a structure lacking what the claim needs.
///
///   l-pre-valid-closed-form  (exists V: l(V) = C)  <=>  l(C) = C, all C
///   upper-additivity         u(A ∪ B) = u(A) ∪ u(B), all A, B
///   approximation-laws       UL1, UL2, UL3 and TB, all instances
///   proposition-def2         deficit defined => traceable, all C
///   overlap-closer           κ is compatible with δ in overlap-closer mode
bool oracle_check(const MssStructure& s, const std::string& claim);

struct OracleVerdict {
  Status status = Status::Holds;
  std::optional<Witness> witness;
};

/// Independent recomputation of a verify() axiom, or nullopt when the oracle
/// does not cover that axiom or the structure lacks a needed slot.
std::optional<OracleVerdict> recompute_axiom(const MssStructure& s, const std::string& axiom);

}  // namespace msslab::oracle
