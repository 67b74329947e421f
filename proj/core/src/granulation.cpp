#include "msslab/granulation.hpp"

#include <algorithm>
#include <bit>

#include "msslab/detail/quantify.hpp"

namespace msslab {

BinaryRelation::BinaryRelation(std::size_t n) : rows_(n, 0) {
  if (n == 0 || n > kMaxUniverseSize) throw StructuralError("relation universe size out of range");
}

BinaryRelation::BinaryRelation(std::size_t n,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : BinaryRelation(n) {
  for (auto [x, y] : pairs) insert(x, y);
}

BinaryRelation BinaryRelation::diagonal(std::size_t n) {
  BinaryRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (auto& row : r.rows_) row = full_mask(n);
  return r;
}

BinaryRelation BinaryRelation::from_code(std::size_t n, std::uint64_t code) {
  if (n * n > 64) throw StructuralError("relation code only covers universes up to 8 elements");
  BinaryRelation r(n);
  for (std::size_t x = 0; x < n; ++x) {
    r.rows_[x] = (code >> (x * n)) & full_mask(n);
  }
  return r;
}

bool BinaryRelation::contains(std::size_t x, std::size_t y) const {
  if (x >= rows_.size() || y >= rows_.size()) return false;
  return ((rows_[x] >> y) & 1U) != 0;
}

void BinaryRelation::insert(std::size_t x, std::size_t y) {
  if (x >= rows_.size() || y >= rows_.size()) {
    throw StructuralError("relation pair (" + std::to_string(x) + "," + std::to_string(y) +
                          ") outside the universe");
  }
  rows_[x] |= std::uint64_t{1} << y;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (auto y : Subset(rows_.size(), rows_[x]).members()) out.emplace_back(x, y);
  }
  return out;
}

std::size_t BinaryRelation::size() const {
  std::size_t total = 0;
  for (auto row : rows_) total += static_cast<std::size_t>(std::popcount(row));
  return total;
}

bool BinaryRelation::is_reflexive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!contains(x, x)) return false;
  }
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (auto [x, y] : pairs()) {
    if (!contains(y, x)) return false;
  }
  return true;
}

bool BinaryRelation::is_transitive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    for (auto y : Subset(rows_.size(), rows_[x]).members()) {
      if ((rows_[y] & ~rows_[x]) != 0) return false;
    }
  }
  return true;
}

Subset BinaryRelation::predecessors(std::size_t x) const {
  std::uint64_t bits = 0;
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    if (contains(y, x)) bits |= std::uint64_t{1} << y;
  }
  return {rows_.size(), bits};
}

BinaryRelation close_relation(const BinaryRelation& r, ClosureFlags flags) {
  BinaryRelation out = r;
  const std::size_t n = r.universe_size();
  if (flags.reflexive) {
    for (std::size_t i = 0; i < n; ++i) out.insert(i, i);
  }
  // Symmetric and transitive closure interact; iterate to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t before = out.size();
    if (flags.symmetric) {
      for (auto [x, y] : out.pairs()) out.insert(y, x);
    }
    if (flags.transitive) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!out.contains(i, k)) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (out.contains(k, j)) out.insert(i, j);
          }
        }
      }
    }
    changed = out.size() != before;
  }
  return out;
}

Granulation::Granulation(std::size_t universe_size, std::vector<Subset> granules)
    : size_(universe_size) {
  if (universe_size == 0 || universe_size > kMaxUniverseSize) {
    throw StructuralError("granulation universe size out of range");
  }
  for (std::size_t i = 0; i < granules.size(); ++i) {
    const Subset& g = granules[i];
    if (g.universe_size() != universe_size) {
      throw StructuralError("granule " + std::to_string(i) + " is over a different universe");
    }
    if (g.is_empty()) {
      diagnostics_.push_back("granule " + std::to_string(i) + " is empty and was dropped");
      continue;
    }
    if (std::find(granules_.begin(), granules_.end(), g) != granules_.end()) {
      diagnostics_.push_back("granule " + std::to_string(i) + " duplicates an earlier granule");
      continue;
    }
    granules_.push_back(g);
  }
}

Subset Granulation::lower(const Subset& a) const {
  if (a.universe_size() != size_) throw StructuralError("subset is over a different universe");
  std::uint64_t bits = 0;
  for (const auto& g : granules_) {
    if ((g.bits() & ~a.bits()) == 0) bits |= g.bits();
  }
  return {size_, bits};
}

Subset Granulation::upper(const Subset& a) const {
  if (a.universe_size() != size_) throw StructuralError("subset is over a different universe");
  std::uint64_t bits = 0;
  for (const auto& g : granules_) {
    if ((g.bits() & a.bits()) != 0) bits |= g.bits();
  }
  return {size_, bits};
}

bool Granulation::is_union_of_granules(const Subset& a) const { return lower(a) == a; }

Granulation predecessor_granulation(const BinaryRelation& r) {
  std::vector<Subset> granules;
  granules.reserve(r.universe_size());
  for (std::size_t x = 0; x < r.universe_size(); ++x) granules.push_back(r.predecessors(x));
  return Granulation(r.universe_size(), std::move(granules));
}

Subset lower(const Subset& a, const Granulation& g) { return g.lower(a); }
Subset upper(const Subset& a, const Granulation& g) { return g.upper(a); }

OperatorSuite OperatorSuite::granular(Granulation g) {
  OperatorSuite s;
  s.size_ = g.universe_size();
  s.granulation_ = std::move(g);
  return s;
}

OperatorSuite OperatorSuite::custom(std::size_t universe_size, Operator lower, Operator upper) {
  if (!lower || !upper) throw ConfigurationError("custom operator suite needs both l and u");
  OperatorSuite s;
  s.size_ = universe_size;
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

Subset OperatorSuite::lower(const Subset& a) const {
  return granulation_ ? granulation_->lower(a) : lower_(a);
}

Subset OperatorSuite::upper(const Subset& a) const {
  return granulation_ ? granulation_->upper(a) : upper_(a);
}

Subset OperatorSuite::bited_upper(const Subset& a) const { return bited_ ? bited_(a) : upper(a); }

OperatorSuite OperatorSuite::with_bited_upper(Operator plugin, const CheckOptions& opt) const {
  if (!plugin) throw ConfigurationError("bited upper plugin is empty");
  auto r = detail::scan<1>(size_, opt, [&](const std::array<Subset, 1>& t) {
    const Subset b = plugin(t[0]);
    const bool ok = b.universe_size() == size_ && part_of(lower(t[0]), b) && part_of(b, upper(t[0]));
    return ok ? detail::Outcome::Pass : detail::Outcome::Fail;
  });
  if (r.failures > 0) {
    throw ConfigurationError("bited upper plugin violates l(A) <= u_b(A) <= u(A) at A with bits " +
                             std::to_string((*r.witness)[0].bits()));
  }
  OperatorSuite copy = *this;
  copy.bited_ = std::move(plugin);
  return copy;
}

Subset bited_upper(const Subset& a, const OperatorSuite& ops) { return ops.bited_upper(a); }

bool is_definite(const Subset& a, const OperatorSuite& ops) {
  return ops.lower(a) == a && ops.upper(a) == a;
}

bool rough_equal(const Subset& a, const Subset& b, const OperatorSuite& ops) {
  require_same_universe(a, b);
  return ops.lower(a) == ops.lower(b) && ops.bited_upper(a) == ops.bited_upper(b);
}

namespace {

// Lex-least definite superset of `base`, searched over supersets only.
std::optional<Subset> least_definite_superset(const Subset& base, const OperatorSuite& ops) {
  const std::size_t n = base.universe_size();
  const std::uint64_t free = full_mask(n) & ~base.bits();
  std::optional<Subset> best;
  std::uint64_t sub = free;
  while (true) {
    const Subset d(n, base.bits() | sub);
    if (is_definite(d, ops) && (!best || lex_less(d, *best))) best = d;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return best;
}

}  // namespace

AdmissibilityVerdict check_admissibility(const Granulation& g, const OperatorSuite& ops,
                                         const CheckOptions& opt) {
  if (g.universe_size() != ops.universe_size()) {
    throw StructuralError("granulation and operators are over different universes");
  }
  const std::size_t n = g.universe_size();
  AdmissibilityVerdict out;

  auto rep = detail::scan<1>(n, opt, [&](const std::array<Subset, 1>& t) {
    const bool ok = g.is_union_of_granules(ops.lower(t[0])) && g.is_union_of_granules(ops.upper(t[0]));
    return ok ? detail::Outcome::Pass : detail::Outcome::Fail;
  });
  out.representable = detail::to_verdict<1>("adm-representable", rep, {"A"}, false, opt);

  out.lower_definite.axiom = "adm-lower-definite";
  std::optional<Subset> not_lower_definite;
  for (const auto& granule : g.granules()) {
    ++out.lower_definite.instances_checked;
    if (ops.lower(granule) != granule && (!not_lower_definite || lex_less(granule, *not_lower_definite))) {
      not_lower_definite = granule;
    }
  }
  if (not_lower_definite) {
    out.lower_definite.status = Status::Fails;
    out.lower_definite.witnesses.push_back({{"G"}, {*not_lower_definite}});
  } else if (g.granules().empty()) {
    out.lower_definite.status = Status::Vacuous;
  }

  out.definite_cover.axiom = "adm-definite-cover";
  const auto& gs = g.granules();
  if (n > kMaxExhaustiveUniverse) {
    out.definite_cover.status = Status::Deferred;
    out.definite_cover.note = "definite-cover search needs a universe of at most " +
                              std::to_string(kMaxExhaustiveUniverse) + " elements";
    return out;
  }
  std::optional<std::array<Subset, 2>> uncovered;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      ++out.definite_cover.instances_checked;
      std::array<Subset, 2> pair{gs[i], gs[j]};
      if (lex_less(pair[1], pair[0])) std::swap(pair[0], pair[1]);
      auto d = least_definite_superset(join(gs[i], gs[j]), ops);
      if (d) {
        out.definite_cover.evidence.push_back({{"G1", "G2", "D"}, {pair[0], pair[1], *d}});
      } else if (!uncovered || detail::tuple_less<2>(pair, *uncovered)) {
        uncovered = pair;
      }
    }
  }
  if (uncovered) {
    out.definite_cover.status = Status::Fails;
    out.definite_cover.witnesses.push_back({{"G1", "G2"}, {(*uncovered)[0], (*uncovered)[1]}});
  }
  std::sort(out.definite_cover.evidence.begin(), out.definite_cover.evidence.end(),
            [](const Witness& a, const Witness& b) {
              return detail::tuple_less<2>({a.values[0], a.values[1]}, {b.values[0], b.values[1]});
            });
  if (out.definite_cover.instances_checked == 0) out.definite_cover.status = Status::Vacuous;
  return out;
}

}  // namespace msslab
