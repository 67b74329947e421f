#pragma once

// Binary relations on a universe, neighbourhood granulations and the
// granular approximation operators built from them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msslab/universe.hpp"
#include "msslab/verdict.hpp"

namespace msslab {

/// A set of ordered pairs over {0..n-1}. Row x holds the successors of x.
class BinaryRelation {
 public:
  explicit BinaryRelation(std::size_t n);
  BinaryRelation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  static BinaryRelation diagonal(std::size_t n);
  static BinaryRelation full(std::size_t n);
  /// Relation whose n*n membership bits are the low bits of `code`
  /// (bit x*n+y set iff (x,y) is a pair).
  static BinaryRelation from_code(std::size_t n, std::uint64_t code);

  std::size_t universe_size() const noexcept { return rows_.size(); }
  bool contains(std::size_t x, std::size_t y) const;
  void insert(std::size_t x, std::size_t y);
  /// Pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t size() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_tolerance() const { return is_reflexive() && is_symmetric(); }

  /// Elements y with (y, x) in the relation.
  Subset predecessors(std::size_t x) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::vector<std::uint64_t> rows_;
};

struct ClosureFlags {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
};

/// Smallest superset of `r` closed under the requested properties.
BinaryRelation close_relation(const BinaryRelation& r, ClosureFlags flags);

/// An ordered list of distinct, nonempty granules.
///
/// Construction drops empty granules and collapses duplicates (keeping the
/// first occurrence); each adjustment is recorded in `diagnostics()`.
class Granulation {
 public:
  Granulation(std::size_t universe_size, std::vector<Subset> granules);

  std::size_t universe_size() const noexcept { return size_; }
  const std::vector<Subset>& granules() const noexcept { return granules_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

  /// Union of the granules contained in `a`.
  Subset lower(const Subset& a) const;
  /// Union of the granules meeting `a`.
  Subset upper(const Subset& a) const;
  /// Whether `a` is exactly a union of granules (possibly the empty union).
  bool is_union_of_granules(const Subset& a) const;

  friend bool operator==(const Granulation& a, const Granulation& b) {
    return a.size_ == b.size_ && a.granules_ == b.granules_;
  }

 private:
  std::size_t size_;
  std::vector<Subset> granules_;
  std::vector<std::string> diagnostics_;
};

/// Predecessor neighbourhoods n(x) = {y : (y,x) in r}, ordered by x.
Granulation predecessor_granulation(const BinaryRelation& r);

Subset lower(const Subset& a, const Granulation& g);
Subset upper(const Subset& a, const Granulation& g);

/// The approximation operators l, u and the bited upper approximation u_b.
///
/// A granular suite derives l and u from a granulation. A custom suite takes
/// arbitrary operator functions and has no granulation. u_b defaults to u and
/// may be replaced by a plugin satisfying l(A) <= plugin(A) <= u(A).
class OperatorSuite {
 public:
  using Operator = std::function<Subset(const Subset&)>;

  static OperatorSuite granular(Granulation g);
  static OperatorSuite custom(std::size_t universe_size, Operator lower, Operator upper);

  std::size_t universe_size() const noexcept { return size_; }
  Subset lower(const Subset& a) const;
  Subset upper(const Subset& a) const;
  Subset bited_upper(const Subset& a) const;

  /// Granulation the operators are derived from, if any.
  const Granulation* granulation() const noexcept { return granulation_ ? &*granulation_ : nullptr; }
  bool has_bited_plugin() const noexcept { return static_cast<bool>(bited_); }

  /// Returns a copy with `plugin` registered as u_b. Throws ConfigurationError
  /// when the sandwich bound fails on some subset (checked exhaustively, or on
  /// a seeded sample for large universes).
  OperatorSuite with_bited_upper(Operator plugin, const CheckOptions& opt = {}) const;

 private:
  OperatorSuite() = default;

  std::size_t size_ = 0;
  std::optional<Granulation> granulation_;
  Operator lower_;
  Operator upper_;
  Operator bited_;
};

/// u_b through the suite (plugin if registered, otherwise u).
Subset bited_upper(const Subset& a, const OperatorSuite& ops);

/// Whether l(A) = A and u(A) = A.
bool is_definite(const Subset& a, const OperatorSuite& ops);

/// A ~ B iff l(A) = l(B) and u_b(A) = u_b(B).
bool rough_equal(const Subset& a, const Subset& b, const OperatorSuite& ops);

/// The three admissibility conditions on a granulation.
struct AdmissibilityVerdict {
  Verdict representable;   ///< every l(A), u(A) is a union of granules
  Verdict lower_definite;  ///< l(G) = G for every granule G
  Verdict definite_cover;  ///< distinct granules lie in a common definite set

  bool all_hold() const {
    return satisfied(representable.status) && satisfied(lower_definite.status) &&
           satisfied(definite_cover.status);
  }
};

AdmissibilityVerdict check_admissibility(const Granulation& g, const OperatorSuite& ops,
                                         const CheckOptions& opt = {});

}  // namespace msslab
