#include "msslab/delta.hpp"

#include <algorithm>
#include <bit>

#include "msslab/detail/quantify.hpp"

namespace msslab {

using detail::Outcome;

NearnessMap::NearnessMap(std::string name, std::size_t universe_size, Function f)
    : name_(std::move(name)), size_(universe_size), f_(std::move(f)) {
  if (!f_) throw ConfigurationError("nearness map '" + name_ + "' has no function");
}

NearnessMap NearnessMap::union_map(std::size_t universe_size) {
  return {"union", universe_size, [](const Subset& a, const Subset& b) { return join(a, b); }};
}

NearnessMap NearnessMap::intersection_map(std::size_t universe_size) {
  return {"intersection", universe_size, [](const Subset& a, const Subset& b) { return meet(a, b); }};
}

NearnessMap NearnessMap::upper_union_map(OperatorSuite ops) {
  const std::size_t n = ops.universe_size();
  return {"upper_union", n,
          [ops = std::move(ops)](const Subset& a, const Subset& b) { return ops.upper(join(a, b)); }};
}

NearnessMap NearnessMap::table(std::size_t universe_size,
                               const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>& entries) {
  if (universe_size > kMaxExhaustiveUniverse) {
    throw ConfigurationError("tabulated nearness maps need a universe of at most " +
                             std::to_string(kMaxExhaustiveUniverse) + " elements");
  }
  const std::uint64_t count = std::uint64_t{1} << universe_size;
  if (entries.size() != count * count) {
    throw ConfigurationError("nearness map table must be total: expected " +
                             std::to_string(count * count) + " entries, got " +
                             std::to_string(entries.size()));
  }
  for (const auto& [key, value] : entries) {
    if (key.first >= count || key.second >= count || value.universe_size() != universe_size) {
      throw ConfigurationError("nearness map table entry outside the universe");
    }
  }
  auto shared = std::make_shared<const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>>(entries);
  return {"table", universe_size, [shared](const Subset& a, const Subset& b) {
            return shared->at({a.bits(), b.bits()});
          }};
}

DeltaTable::DeltaTable(std::size_t universe_size) : size_(universe_size) {
  if (universe_size == 0 || universe_size > kMaxUniverse) {
    throw ConfigurationError("extensional delta tables are only admitted for universes of 1.." +
                             std::to_string(kMaxUniverse) + " elements");
  }
  const std::size_t cells = std::size_t{1} << (3 * universe_size);
  bits_.assign((cells + 63) / 64, 0);
}

std::size_t DeltaTable::index(const Subset& a, const Subset& b, const Subset& c) const {
  if (a.universe_size() != size_ || b.universe_size() != size_ || c.universe_size() != size_) {
    throw StructuralError("delta table triple over a different universe");
  }
  return static_cast<std::size_t>(a.bits() | (b.bits() << size_) | (c.bits() << (2 * size_)));
}

bool DeltaTable::contains(const Subset& a, const Subset& b, const Subset& c) const {
  const std::size_t i = index(a, b, c);
  return ((bits_[i / 64] >> (i % 64)) & 1U) != 0;
}

void DeltaTable::insert(const Subset& a, const Subset& b, const Subset& c) {
  const std::size_t i = index(a, b, c);
  bits_[i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t DeltaTable::size() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::array<Subset, 3>> DeltaTable::triples() const {
  std::vector<std::array<Subset, 3>> out;
  const std::uint64_t mask = full_mask(size_);
  const std::size_t cells = std::size_t{1} << (3 * size_);
  for (std::size_t i = 0; i < cells; ++i) {
    if (((bits_[i / 64] >> (i % 64)) & 1U) == 0) continue;
    out.push_back({Subset(size_, i & mask), Subset(size_, (i >> size_) & mask),
                   Subset(size_, (i >> (2 * size_)) & mask)});
  }
  std::sort(out.begin(), out.end(), detail::tuple_less<3>);
  return out;
}

std::string to_string(DeltaKind k) {
  switch (k) {
    case DeltaKind::E0: return "E0";
    case DeltaKind::E1: return "E1";
    case DeltaKind::E2: return "E2";
    case DeltaKind::UE1: return "uE1";
    case DeltaKind::Def0: return "def0";
    case DeltaKind::Extensional: return "extensional";
  }
  return "?";
}

DeltaPredicate::DeltaPredicate(DeltaKind kind, std::size_t size)
    : kind_(kind), size_(size), name_(to_string(kind)) {}

DeltaPredicate DeltaPredicate::e0(std::size_t universe_size) { return {DeltaKind::E0, universe_size}; }
DeltaPredicate DeltaPredicate::e1(std::size_t universe_size) { return {DeltaKind::E1, universe_size}; }

DeltaPredicate DeltaPredicate::e2(OperatorSuite ops) {
  DeltaPredicate d(DeltaKind::E2, ops.universe_size());
  d.ops_ = std::make_shared<const OperatorSuite>(std::move(ops));
  return d;
}

DeltaPredicate DeltaPredicate::ue1(OperatorSuite ops) {
  DeltaPredicate d(DeltaKind::UE1, ops.universe_size());
  d.ops_ = std::make_shared<const OperatorSuite>(std::move(ops));
  return d;
}

DeltaPredicate DeltaPredicate::def0(NearnessMap f) {
  DeltaPredicate d(DeltaKind::Def0, f.universe_size());
  d.name_ = "def0(" + f.name() + ")";
  d.map_ = std::make_shared<const NearnessMap>(std::move(f));
  return d;
}

DeltaPredicate DeltaPredicate::extensional(DeltaTable table) {
  DeltaPredicate d(DeltaKind::Extensional, table.universe_size());
  d.table_ = std::make_shared<const DeltaTable>(std::move(table));
  return d;
}

DeltaPredicate DeltaPredicate::builtin(DeltaKind kind, std::size_t universe_size,
                                       const OperatorSuite* ops) {
  switch (kind) {
    case DeltaKind::E0: return e0(universe_size);
    case DeltaKind::E1: return e1(universe_size);
    case DeltaKind::E2:
    case DeltaKind::UE1:
      if (ops == nullptr) {
        throw ConfigurationError(to_string(kind) + " needs approximation operators");
      }
      return kind == DeltaKind::E2 ? e2(*ops) : ue1(*ops);
    case DeltaKind::Def0:
    case DeltaKind::Extensional:
      break;
  }
  throw ConfigurationError(to_string(kind) + " is not a parameterless built-in");
}

bool DeltaPredicate::operator()(const Subset& a, const Subset& b, const Subset& c) const {
  switch (kind_) {
    case DeltaKind::E0: return part_of(join(a, b), join(a, c));
    case DeltaKind::E1: return proper_part_of(join(a, b), join(a, c));
    case DeltaKind::E2: return proper_part_of(ops_->lower(meet(a, c)), ops_->lower(meet(a, b)));
    case DeltaKind::UE1: return part_of(ops_->upper(join(a, b)), ops_->upper(join(a, c)));
    case DeltaKind::Def0: return part_of((*map_)(a, b), (*map_)(a, c));
    case DeltaKind::Extensional: return table_->contains(a, b, c);
  }
  return false;
}

bool eval_delta(const DeltaPredicate& d, const Subset& a, const Subset& b, const Subset& c) {
  return d(a, b, c);
}

SumOperation SumOperation::total_union(std::size_t universe_size) {
  return {Mode::TotalUnion, universe_size};
}

SumOperation SumOperation::granular_sum(Granulation g) {
  SumOperation s(Mode::GranularSum, g.universe_size());
  s.granulation_ = std::make_shared<const Granulation>(std::move(g));
  return s;
}

SumOperation SumOperation::extensional(std::size_t universe_size,
                                       std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> table) {
  for (const auto& [key, value] : table) {
    if ((key.first & ~full_mask(universe_size)) != 0 || (key.second & ~full_mask(universe_size)) != 0 ||
        value.universe_size() != universe_size) {
      throw ConfigurationError("sum table entry outside the universe");
    }
  }
  SumOperation s(Mode::ExtensionalPartial, universe_size);
  s.table_ = std::make_shared<const std::map<std::pair<std::uint64_t, std::uint64_t>, Subset>>(
      std::move(table));
  return s;
}

std::string SumOperation::name() const {
  switch (mode_) {
    case Mode::TotalUnion: return "total-union";
    case Mode::GranularSum: return "granular-sum";
    case Mode::ExtensionalPartial: return "extensional-partial";
  }
  return "?";
}

PartialResult SumOperation::operator()(const Subset& a, const Subset& b) const {
  require_same_universe(a, b);
  switch (mode_) {
    case Mode::TotalUnion: return join(a, b);
    case Mode::GranularSum: {
      const Subset u = join(a, b);
      if (!granulation_->is_union_of_granules(u)) return std::nullopt;
      return u;
    }
    case Mode::ExtensionalPartial: {
      auto it = table_->find({a.bits(), b.bits()});
      if (it == table_->end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

PartialResult eval_sum(const SumOperation& s, const Subset& a, const Subset& b) { return s(a, b); }

std::string to_string(CoherenceAxiom a) {
  switch (a) {
    case CoherenceAxiom::ICoh: return "i-coh";
    case CoherenceAxiom::NCoh: return "n-coh";
    case CoherenceAxiom::ICoh2: return "i-coh-2";
    case CoherenceAxiom::StrictNCoh: return "strict-n-coh";
    case CoherenceAxiom::Trans1: return "trans-1";
  }
  return "?";
}

std::optional<CoherenceAxiom> coherence_axiom_from_string(const std::string& id) {
  for (auto a : {CoherenceAxiom::ICoh, CoherenceAxiom::NCoh, CoherenceAxiom::ICoh2,
                 CoherenceAxiom::StrictNCoh, CoherenceAxiom::Trans1}) {
    if (to_string(a) == id) return a;
  }
  return std::nullopt;
}

namespace {

Outcome implies(bool antecedent, bool consequent) {
  if (!antecedent) return Outcome::Vacuous;
  return consequent ? Outcome::Pass : Outcome::Fail;
}

Outcome require(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

}  // namespace

Verdict check_coherence(const DeltaPredicate& d, CoherenceAxiom axiom, const CheckOptions& opt,
                        Trans1Reading reading) {
  const std::size_t n = d.universe_size();
  const std::string id = to_string(axiom);
  switch (axiom) {
    case CoherenceAxiom::ICoh: {
      auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
        const auto& [a, b] = t;
        return require(d(b, b, a));
      });
      return detail::to_verdict<2>(id, r, {"a", "b"}, false, opt);
    }
    case CoherenceAxiom::ICoh2: {
      auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
        const auto& [a, b] = t;
        return require(!d(a, b, b));
      });
      return detail::to_verdict<2>(id, r, {"a", "b"}, false, opt);
    }
    case CoherenceAxiom::NCoh: {
      auto r = detail::scan<3>(n, opt, [&](const std::array<Subset, 3>& t) {
        const auto& [a, b, c] = t;
        return implies(d(a, b, c), d(b, a, c));
      });
      return detail::to_verdict<3>(id, r, {"a", "b", "c"}, true, opt);
    }
    case CoherenceAxiom::StrictNCoh: {
      auto r = detail::scan<3>(n, opt, [&](const std::array<Subset, 3>& t) {
        const auto& [a, b, c] = t;
        return implies(d(a, b, c), !d(a, c, b));
      });
      return detail::to_verdict<3>(id, r, {"a", "b", "c"}, true, opt);
    }
    case CoherenceAxiom::Trans1: {
      auto r = detail::scan<4>(n, opt, [&](const std::array<Subset, 4>& t) {
        const auto& [a, b, c, e] = t;
        const bool consequent =
            reading == Trans1Reading::Literal ? !d(a, e, c) : d(a, e, c);
        return implies(d(a, b, c) && d(a, e, b), consequent);
      });
      Verdict v = detail::to_verdict<4>(id, r, {"a", "b", "c", "e"}, true, opt);
      if (reading == Trans1Reading::Positive) v.note = "positive reading: consequent is δaec";
      return v;
    }
  }
  throw ConfigurationError("unknown coherence axiom");
}

std::vector<Verdict> check_sum_laws(const SumOperation& s, const CheckOptions& opt) {
  const std::size_t n = s.universe_size();
  std::vector<Verdict> out;

  auto com = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
    return require(omega_star_equal(s(t[0], t[1]), s(t[1], t[0])));
  });
  out.push_back(detail::to_verdict<2>("omega*-com", com, {"a", "b"}, false, opt));

  auto id = detail::scan<1>(n, opt, [&](const std::array<Subset, 1>& t) {
    const PartialResult aa = s(t[0], t[0]);
    if (!aa) return Outcome::Vacuous;
    return require(omega_equal(aa, t[0]));
  });
  out.push_back(detail::to_verdict<1>("omega-id", id, {"a"}, false, opt));

  auto asso = detail::scan<3>(n, opt, [&](const std::array<Subset, 3>& t) {
    const auto& [a, b, c] = t;
    const PartialResult bc = s(b, c);
    const PartialResult ab = s(a, b);
    const PartialResult lhs = bc ? s(a, *bc) : std::nullopt;
    const PartialResult rhs = ab ? s(*ab, c) : std::nullopt;
    if (!lhs || !rhs) return Outcome::Vacuous;
    return require(*lhs == *rhs);
  });
  out.push_back(detail::to_verdict<3>("omega-asso", asso, {"a", "b", "c"}, false, opt));
  return out;
}

std::vector<Verdict> check_sum_axioms(const DeltaPredicate& d, const SumOperation& s,
                                      const CheckOptions& opt) {
  if (d.universe_size() != s.universe_size()) {
    throw StructuralError("delta and sum are over different universes");
  }
  const std::size_t n = d.universe_size();
  std::vector<Verdict> out = check_sum_laws(s, opt);

  for (int slot = 0; slot < 3; ++slot) {
    auto r = detail::scan<3>(n, opt, [&](const std::array<Subset, 3>& t) {
      if (!d(t[0], t[1], t[2])) return Outcome::Vacuous;
      const PartialResult doubled = s(t[slot], t[slot]);
      if (!doubled) return Outcome::Vacuous;
      std::array<Subset, 3> u = t;
      u[slot] = *doubled;
      return require(d(u[0], u[1], u[2]));
    });
    out.push_back(detail::to_verdict<3>("delta-sum" + std::to_string(slot + 1), r, {"a", "b", "c"},
                                        true, opt));
  }
  return out;
}

std::string to_string(DefMode m) {
  switch (m) {
    case DefMode::Def1: return "def1";
    case DefMode::Def2: return "def2";
    case DefMode::Def0: return "def0";
  }
  return "?";
}

Verdict check_def_compat(const DeltaPredicate& d, const NearnessMap& f, DefMode mode,
                         const CheckOptions& opt,
                         const std::function<bool(const Subset&, const Subset&)>& parthood) {
  if (d.universe_size() != f.universe_size()) {
    throw StructuralError("delta and nearness map are over different universes");
  }
  auto p = [&](const Subset& x, const Subset& y) { return parthood ? parthood(x, y) : part_of(x, y); };
  auto r = detail::scan<3>(d.universe_size(), opt, [&](const std::array<Subset, 3>& t) {
    const auto& [a, b, c] = t;
    const bool delta = d(a, b, c);
    const bool via_f = p(f(a, b), f(a, c));
    switch (mode) {
      case DefMode::Def1: return implies(delta, via_f);
      case DefMode::Def2: return implies(via_f, delta);
      case DefMode::Def0: return require(delta == via_f);
    }
    return Outcome::Fail;
  });
  return detail::to_verdict<3>(to_string(mode), r, {"a", "b", "c"}, mode != DefMode::Def0, opt);
}

}  // namespace msslab
