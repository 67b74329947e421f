#pragma once

// Re-evaluates one reported counterexample against a structure.

#include <optional>
#include <string>

#include "msslab/mss.hpp"
#include "msslab/verdict.hpp"

namespace msslab {

/// Whether `w` is a genuine violating instance of `axiom` in `s`.
///
/// Covers every registered axiom except clos1, and compatibility verdicts
/// named "compatibility:<mode>:<delta>" when κ is bound and the δ name
/// matches the bound δ. Returns nullopt when the axiom is not covered or a
/// needed symbol is unbound. Throws StructuralError when the witness has the
/// wrong shape.
std::optional<bool> replay_witness(const MssStructure& s, const std::string& axiom, const Witness& w,
                                   Trans1Reading reading = Trans1Reading::Literal);

}  // namespace msslab
