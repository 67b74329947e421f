#pragma once

// The ternary nearness predicate, the partial sum, and the axiom checks that
// relate them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msslab/granulation.hpp"
#include "msslab/universe.hpp"
#include "msslab/verdict.hpp"

namespace msslab {

/// A map f : S x S -> S, total on the powerset.
class NearnessMap {
 public:
  using Function = std::function<Subset(const Subset&, const Subset&)>;

  NearnessMap(std::string name, std::size_t universe_size, Function f);

  /// f(a, b) = a ∪ b.
  static NearnessMap union_map(std::size_t universe_size);
  /// f(a, b) = a ∩ b.
  static NearnessMap intersection_map(std::size_t universe_size);
  /// f(a, b) = u(a ∪ b).
  static NearnessMap upper_union_map(OperatorSuite ops);
  /// Tabulated map; throws ConfigurationError unless every pair is present.
  static NearnessMap table(std::size_t universe_size,
                           const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>& entries);

  const std::string& name() const noexcept { return name_; }
  std::size_t universe_size() const noexcept { return size_; }
  Subset operator()(const Subset& a, const Subset& b) const { return f_(a, b); }

 private:
  std::string name_;
  std::size_t size_;
  Function f_;
};

/// Extensional delta: a set of subset triples, stored as a bitmap indexed by
/// a | b << n | c << 2n. Only admitted for universes of at most 6 elements.
class DeltaTable {
 public:
  static constexpr std::size_t kMaxUniverse = 6;

  explicit DeltaTable(std::size_t universe_size);

  std::size_t universe_size() const noexcept { return size_; }
  bool contains(const Subset& a, const Subset& b, const Subset& c) const;
  void insert(const Subset& a, const Subset& b, const Subset& c);
  std::size_t size() const;
  /// Triples sorted lexicographically (canonical order).
  std::vector<std::array<Subset, 3>> triples() const;

  friend bool operator==(const DeltaTable&, const DeltaTable&) = default;

 private:
  std::size_t index(const Subset& a, const Subset& b, const Subset& c) const;

  std::size_t size_;
  std::vector<std::uint64_t> bits_;
};

enum class DeltaKind { E0, E1, E2, UE1, Def0, Extensional };

std::string to_string(DeltaKind k);

/// The predicate δabc ("a is closer to b than to c").
///
///   E0:  a∪b ⊆ a∪c
///   E1:  a∪b ⊊ a∪c
///   E2:  l(a∩c) ⊊ l(a∩b)
///   uE1: u(a∪b) ⊆ u(a∪c)
///   def0(f): f(a,b) ⊆ f(a,c)
///
/// E2 and uE1 bind the operator suite given at construction.
class DeltaPredicate {
 public:
  static DeltaPredicate e0(std::size_t universe_size);
  static DeltaPredicate e1(std::size_t universe_size);
  static DeltaPredicate e2(OperatorSuite ops);
  static DeltaPredicate ue1(OperatorSuite ops);
  static DeltaPredicate def0(NearnessMap f);
  static DeltaPredicate extensional(DeltaTable table);
  /// Builds a named built-in. Throws ConfigurationError when the kind needs
  /// approximations and `ops` is null.
  static DeltaPredicate builtin(DeltaKind kind, std::size_t universe_size, const OperatorSuite* ops);

  DeltaKind kind() const noexcept { return kind_; }
  std::size_t universe_size() const noexcept { return size_; }
  /// Display name; defaults to the kind.
  const std::string& name() const noexcept { return name_; }
  DeltaPredicate& rename(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  const DeltaTable* table() const noexcept { return table_.get(); }
  const OperatorSuite* operators() const noexcept { return ops_.get(); }
  const NearnessMap* nearness_map() const noexcept { return map_.get(); }

  bool operator()(const Subset& a, const Subset& b, const Subset& c) const;

 private:
  DeltaPredicate(DeltaKind kind, std::size_t size);

  DeltaKind kind_;
  std::size_t size_;
  std::string name_;
  std::shared_ptr<const OperatorSuite> ops_;
  std::shared_ptr<const NearnessMap> map_;
  std::shared_ptr<const DeltaTable> table_;
};

bool eval_delta(const DeltaPredicate& d, const Subset& a, const Subset& b, const Subset& c);

/// The partial sum ⊕.
class SumOperation {
 public:
  enum class Mode { TotalUnion, GranularSum, ExtensionalPartial };

  static SumOperation total_union(std::size_t universe_size);
  /// a ⊕ b defined iff a ∪ b is a union of granules; value a ∪ b.
  static SumOperation granular_sum(Granulation g);
  /// Defined exactly on the listed ordered pairs (keyed by subset bits).
  static SumOperation extensional(std::size_t universe_size,
                                  std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> table);

  Mode mode() const noexcept { return mode_; }
  std::size_t universe_size() const noexcept { return size_; }
  std::string name() const;
  PartialResult operator()(const Subset& a, const Subset& b) const;

  const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>* table() const noexcept {
    return table_.get();
  }
  const Granulation* granulation() const noexcept { return granulation_.get(); }

 private:
  SumOperation(Mode m, std::size_t n) : mode_(m), size_(n) {}

  Mode mode_;
  std::size_t size_;
  std::shared_ptr<const Granulation> granulation_;
  std::shared_ptr<const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>> table_;
};

PartialResult eval_sum(const SumOperation& s, const Subset& a, const Subset& b);

enum class CoherenceAxiom { ICoh, NCoh, ICoh2, StrictNCoh, Trans1 };

std::string to_string(CoherenceAxiom a);
std::optional<CoherenceAxiom> coherence_axiom_from_string(const std::string& id);

/// How trans-1 (δabc & δaeb → ¬δaec) is read.
enum class Trans1Reading {
  Literal,   ///< as stated, e universally quantified with a, b, c
  Positive,  ///< consequent δaec (ordinary transitivity in the middle slot)
};

/// Checks one coherence axiom over the whole powerset. Every variable is
/// universally quantified; the witness is the lexicographically least
/// violating tuple.
Verdict check_coherence(const DeltaPredicate& d, CoherenceAxiom axiom, const CheckOptions& opt = {},
                        Trans1Reading reading = Trans1Reading::Literal);

/// Sum laws (ω*-com, ω-id, ω-asso) followed by δ-sum1..3. Each δ-sum instance
/// passes vacuously where the relevant self-sum is undefined.
std::vector<Verdict> check_sum_axioms(const DeltaPredicate& d, const SumOperation& s,
                                      const CheckOptions& opt = {});
/// Only the three ⊕ laws.
std::vector<Verdict> check_sum_laws(const SumOperation& s, const CheckOptions& opt = {});

enum class DefMode { Def1, Def2, Def0 };

std::string to_string(DefMode m);

/// def1: δabc → P f(a,b) f(a,c); def2: the converse; def0: both.
/// P is inclusion unless `parthood` is given.
Verdict check_def_compat(const DeltaPredicate& d, const NearnessMap& f, DefMode mode,
                         const CheckOptions& opt = {},
                         const std::function<bool(const Subset&, const Subset&)>& parthood = {});

}  // namespace msslab
