#pragma once

// Assembly of minimal soft clustering systems, signature reducts, the axiom
// battery and classification.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msslab/clustering.hpp"
#include "msslab/delta.hpp"
#include "msslab/granulation.hpp"
#include "msslab/universe.hpp"
#include "msslab/verdict.hpp"

namespace msslab {

/// Interpretable symbols of the signature. `Carrier` stands for the
/// underlying set and can never be dropped.
enum class Symbol {
  Carrier,
  Parthood,
  Delta,
  Sum,
  Kappa,
  Order,
  Join,
  Meet,
  Lower,
  Upper,
  Top,
  Bottom,
  Granulation,
};

using Signature = std::set<Symbol>;

std::string to_string(Symbol s);
/// Accepts "P", "delta", "sum", "kappa", "leq", "join", "meet", "l", "u",
/// "top", "bottom", "gamma", "carrier" and their symbolic spellings.
std::optional<Symbol> symbol_from_string(const std::string& name);
/// Every symbol except Carrier.
const Signature& full_signature();

struct NamedPredicate {
  std::string name;
  std::function<bool(const Subset&, const Subset&)> fn;
};

struct NamedOperation {
  std::string name;
  std::function<PartialResult(const Subset&, const Subset&)> fn;
};

NamedPredicate inclusion_predicate();
NamedOperation union_operation();
NamedOperation intersection_operation();

/// The pieces of a structure. Unset optionals are deferred slots.
struct MssComponents {
  explicit MssComponents(Universe u) : universe(std::move(u)) {}

  /// Universe with P = ≤ = ⊆, ∨ = ∪, ∧ = ∩, ⊤ and ⊥ bound.
  static MssComponents standard(Universe u);

  Universe universe;
  std::optional<NamedPredicate> parthood;
  std::optional<NamedPredicate> order;
  std::optional<NamedOperation> join;
  std::optional<NamedOperation> meet;
  std::optional<OperatorSuite> operators;  // binds l and u
  bool top = false;
  bool bottom = false;
  std::optional<DeltaPredicate> delta;
  std::optional<SumOperation> sum;
  std::optional<Clustering> kappa;
  std::optional<Granulation> granulation;
};

/// An immutable structure. Accessors return null for unbound symbols.
class MssStructure {
 public:
  const Universe& universe() const noexcept { return *universe_; }
  std::size_t universe_size() const noexcept { return universe_->size(); }
  const Signature& signature() const noexcept { return bound_; }
  bool bound(Symbol s) const { return s == Symbol::Carrier || bound_.count(s) != 0; }
  bool bound_all(const Signature& s) const;

  const NamedPredicate* parthood() const;
  const NamedPredicate* order() const;
  const NamedOperation* join_op() const;
  const NamedOperation* meet_op() const;
  /// Non-null when both l and u are bound.
  const OperatorSuite* operators() const;
  /// Non-null when at least one of l, u is bound (for partial reducts).
  const OperatorSuite* raw_operators() const;
  const DeltaPredicate* delta() const;
  const SumOperation* sum() const;
  const Clustering* kappa() const;
  const Granulation* granulation() const;
  Subset top() const { return universe_->full(); }
  Subset bottom() const { return universe_->empty(); }

  /// Copy with δ bound (or replaced).
  MssStructure with_delta(DeltaPredicate d) const;
  /// Copy with κ bound to the given clusters.
  MssStructure with_kappa(Clustering k) const;

 private:
  friend MssStructure assemble(MssComponents c);
  friend MssStructure reduct(const MssStructure& s, const Signature& keep);

  MssStructure() = default;
  void validate() const;

  std::shared_ptr<const Universe> universe_;
  std::shared_ptr<const MssComponents> parts_;
  Signature bound_;
};

/// Validates and binds components. Throws StructuralError on mixed universes,
/// or when a granulation is present but the operators are not derived from it.
MssStructure assemble(MssComponents c);

/// Same carrier, only the kept interpretations.
MssStructure reduct(const MssStructure& s, const Signature& keep);
/// Drops the listed symbols. Dropping the carrier throws StructuralError.
MssStructure reduct_dropping(const MssStructure& s, const Signature& drop);

struct AxiomInfo {
  std::string id;
  Signature needs;
  bool in_definition;  ///< part of the MSS definition proper
};

/// Registered axiom ids in report order.
const std::vector<AxiomInfo>& axiom_registry();
const AxiomInfo* find_axiom(const std::string& id);

struct VerifyOptions {
  CheckOptions check;
  Trans1Reading trans1 = Trans1Reading::Literal;
};

/// One verdict per requested axiom (all registered axioms when empty).
/// Axioms needing an unbound slot come back Deferred; clos1 is Unspecified.
/// Throws ConfigurationError for an unknown id.
std::vector<Verdict> verify(const MssStructure& s, const std::vector<std::string>& axioms = {},
                            const VerifyOptions& opt = {});

enum class Tri { False, True, Deferred };

std::string to_string(Tri t);

struct Classification {
  Tri is_mss = Tri::Deferred;
  Tri is_strict = Tri::Deferred;
  Tri is_rough = Tri::Deferred;
  Tri is_gmss = Tri::Deferred;
};

/// Classifies from verdicts produced by verify on the same structure.
Classification classify(const MssStructure& s, const std::vector<Verdict>& verdicts);
/// Runs the full battery and classifies.
Classification classify(const MssStructure& s, const VerifyOptions& opt = {});

}  // namespace msslab
