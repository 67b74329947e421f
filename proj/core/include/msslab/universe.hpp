#pragma once

// Finite universes, characteristic-vector subsets and the partial-term
// equalities used throughout the library.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace msslab {

/// Raised when values over different universes are combined, or when a
/// universe is malformed.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for invalid combinations of otherwise well-formed components.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive request exceeds the allowed budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

/// Hard limit on universe size (one machine word per subset).
inline constexpr std::size_t kMaxUniverseSize = 64;
/// Largest universe on which powerset enumeration is permitted.
inline constexpr std::size_t kMaxExhaustiveUniverse = 24;

/// Mask with the low `n` bits set.
constexpr std::uint64_t full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// A subset of a finite universe, stored as a characteristic vector.
///
/// Two subsets are equal when they live in universes of the same size and
/// have the same members. All set operations check the universe size and
/// throw StructuralError on mismatch.
class Subset {
 public:
  Subset() = default;
  Subset(std::size_t universe_size, std::uint64_t bits);

  static Subset empty(std::size_t universe_size) { return {universe_size, 0}; }
  static Subset full(std::size_t universe_size) {
    return {universe_size, full_mask(universe_size)};
  }
  static Subset singleton(std::size_t universe_size, std::size_t index);
  static Subset of(std::size_t universe_size, std::initializer_list<std::size_t> members);

  std::size_t universe_size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(std::size_t index) const noexcept {
    return index < size_ && ((bits_ >> index) & 1U) != 0;
  }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(size_); }
  std::size_t count() const noexcept;
  std::vector<std::size_t> members() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

/// Result of a partial operation: `std::nullopt` means undefined.
using PartialResult = std::optional<Subset>;

void require_same_universe(const Subset& a, const Subset& b);

/// Parthood in its inclusion instantiation: every member of `a` is in `b`.
bool part_of(const Subset& a, const Subset& b);
bool proper_part_of(const Subset& a, const Subset& b);
Subset join(const Subset& a, const Subset& b);
Subset meet(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
Subset set_difference(const Subset& a, const Subset& b);

/// When the partial difference `a \ b` is defined.
enum class DifferencePolicy {
  Contained,        ///< defined iff b is a part of a (default)
  Total,            ///< always defined
  ProperContained,  ///< defined iff b is a proper part of a
};

PartialResult partial_difference(const Subset& a, const Subset& b,
                                 DifferencePolicy policy = DifferencePolicy::Contained);

/// Equal whenever both sides are defined.
bool omega_equal(const PartialResult& lhs, const PartialResult& rhs) noexcept;
/// Defined together, and equal when defined.
bool omega_star_equal(const PartialResult& lhs, const PartialResult& rhs) noexcept;

/// Lexicographic order on sorted member-index lists; the empty set is least.
/// This is the order used everywhere a "minimal witness" is selected.
bool lex_less(const Subset& a, const Subset& b);

/// Ordered, duplicate-free list of element names.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names);
  /// Universe {x1, ..., xn}.
  static Universe numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Subset empty() const { return Subset::empty(size()); }
  Subset full() const { return Subset::full(size()); }
  /// Throws StructuralError for names not in the universe.
  Subset subset(const std::vector<std::string>& names) const;
  Subset subset(std::initializer_list<std::string_view> names) const;
  std::vector<std::string> names_of(const Subset& s) const;
  /// Renders as "{x1,x3}".
  std::string format(const Subset& s) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// All subsets of an n-element universe in lexicographic order.
std::vector<Subset> lex_ordered_powerset(std::size_t n);

}  // namespace msslab
