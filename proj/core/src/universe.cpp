#include "msslab/universe.hpp"

#include <algorithm>
#include <bit>

namespace msslab {

Subset::Subset(std::size_t universe_size, std::uint64_t bits)
    : bits_(bits), size_(static_cast<std::uint8_t>(universe_size)) {
  if (universe_size > kMaxUniverseSize) {
    throw StructuralError("universe size " + std::to_string(universe_size) + " exceeds " +
                          std::to_string(kMaxUniverseSize));
  }
  if ((bits & ~full_mask(universe_size)) != 0) {
    throw StructuralError("subset has members outside a universe of size " +
                          std::to_string(universe_size));
  }
}

Subset Subset::singleton(std::size_t universe_size, std::size_t index) {
  if (index >= universe_size) {
    throw StructuralError("element index " + std::to_string(index) + " out of range");
  }
  return {universe_size, std::uint64_t{1} << index};
}

Subset Subset::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
  std::uint64_t bits = 0;
  for (auto m : members) {
    if (m >= universe_size) {
      throw StructuralError("element index " + std::to_string(m) + " out of range");
    }
    bits |= std::uint64_t{1} << m;
  }
  return {universe_size, bits};
}

std::size_t Subset::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe_size() != b.universe_size()) {
    throw StructuralError("universe mismatch: sizes " + std::to_string(a.universe_size()) +
                          " and " + std::to_string(b.universe_size()));
  }
}

bool part_of(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

bool proper_part_of(const Subset& a, const Subset& b) { return part_of(a, b) && a != b; }

Subset join(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return {a.universe_size(), a.bits() | b.bits()};
}

Subset meet(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return {a.universe_size(), a.bits() & b.bits()};
}

Subset complement(const Subset& a) {
  return {a.universe_size(), ~a.bits() & full_mask(a.universe_size())};
}

Subset set_difference(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  return {a.universe_size(), a.bits() & ~b.bits()};
}

PartialResult partial_difference(const Subset& a, const Subset& b, DifferencePolicy policy) {
  require_same_universe(a, b);
  switch (policy) {
    case DifferencePolicy::Total:
      break;
    case DifferencePolicy::Contained:
      if (!part_of(b, a)) return std::nullopt;
      break;
    case DifferencePolicy::ProperContained:
      if (!proper_part_of(b, a)) return std::nullopt;
      break;
  }
  return set_difference(a, b);
}

bool omega_equal(const PartialResult& lhs, const PartialResult& rhs) noexcept {
  if (!lhs || !rhs) return true;
  return *lhs == *rhs;
}

bool omega_star_equal(const PartialResult& lhs, const PartialResult& rhs) noexcept {
  if (lhs.has_value() != rhs.has_value()) return false;
  return !lhs || *lhs == *rhs;
}

bool lex_less(const Subset& a, const Subset& b) {
  require_same_universe(a, b);
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  // Both lists agree below the lowest differing element d. The one holding d
  // is smaller unless the other one has already ended.
  if ((a.bits() & low) != 0) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw StructuralError("universe must contain at least one element");
  if (names_.size() > kMaxUniverseSize) {
    throw StructuralError("universe has " + std::to_string(names_.size()) +
                          " elements; at most " + std::to_string(kMaxUniverseSize) +
                          " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructuralError("element names must be nonempty");
    if (!index_.emplace(names_[i], i).second) {
      throw StructuralError("duplicate element name '" + names_[i] + "'");
    }
  }
}

Universe Universe::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Universe(std::move(names));
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset Universe::subset(const std::vector<std::string>& names) const {
  std::uint64_t bits = 0;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw StructuralError("undeclared element '" + n + "'");
    bits |= std::uint64_t{1} << *idx;
  }
  return {size(), bits};
}

Subset Universe::subset(std::initializer_list<std::string_view> names) const {
  std::vector<std::string> v;
  for (auto n : names) v.emplace_back(n);
  return subset(v);
}

std::vector<std::string> Universe::names_of(const Subset& s) const {
  if (s.universe_size() != size()) throw StructuralError("subset is over a different universe");
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(names_[i]);
  return out;
}

std::string Universe::format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names_of(s)) {
    if (!first) out += ',';
    out += n;
    first = false;
  }
  return out + "}";
}

std::vector<Subset> lex_ordered_powerset(std::size_t n) {
  if (n > kMaxExhaustiveUniverse) {
    throw BudgetError("powerset of a " + std::to_string(n) + "-element universe is too large",
                      std::uint64_t{1} << std::min<std::size_t>(n, 63));
  }
  std::vector<Subset> all;
  all.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b <= full_mask(n); ++b) all.emplace_back(n, b);
  std::sort(all.begin(), all.end(), lex_less);
  return all;
}

}  // namespace msslab
