#include "msslab/replay.hpp"

#include "msslab/validation.hpp"

namespace msslab {

namespace {

const Subset& var(const Witness& w, const char* name) {
  for (std::size_t i = 0; i < w.variables.size() && i < w.values.size(); ++i) {
    if (w.variables[i] == name) return w.values[i];
  }
  throw StructuralError(std::string("witness lacks variable '") + name + "'");
}

bool union_of(const Granulation& g, const Subset& a) { return g.lower(a) == a; }

bool is_granule(const Granulation& g, const Subset& a) {
  for (const auto& x : g.granules()) {
    if (x == a) return true;
  }
  return false;
}

PartialResult apply(const NamedOperation* op, const PartialResult& a, const PartialResult& b) {
  if (!a || !b) return std::nullopt;
  return op->fn(*a, *b);
}

// True when some comparison has both sides defined and they differ.
bool omega_differs(std::initializer_list<std::pair<PartialResult, PartialResult>> pairs) {
  for (const auto& [x, y] : pairs) {
    if (x && y && *x != *y) return true;
  }
  return false;
}

std::optional<bool> replay_compatibility(const MssStructure& s, const std::string& axiom, const Witness& w) {
  const auto first = axiom.find(':');
  const auto last = axiom.rfind(':');
  if (first == last) return std::nullopt;
  const std::string mode_text = axiom.substr(first + 1, last - first - 1);
  const std::string delta_name = axiom.substr(last + 1);
  const DeltaPredicate* d = s.delta();
  const Clustering* k = s.kappa();
  if (d == nullptr || k == nullptr || d->name() != delta_name) return std::nullopt;
  const CompatibilityMode mode = CompatibilityMode::parse(mode_text);
  const std::size_t n = s.universe_size();

  if (mode.kind == CompatibilityMode::Kind::OverlapCloser) {
    const Subset& a = var(w, "A");
    const Subset& b = var(w, "B");
    const Subset& c = var(w, "C");
    if (!k->contains(a) || !k->contains(b) || !k->contains(c)) return false;
    if (a == b || a == c || b == c) return false;
    return !meet(a, b).is_empty() && meet(a, c).is_empty() && !(*d)(a, b, c);
  }

  const Subset& cluster = var(w, "A");
  const Subset& x = var(w, "a");
  const Subset& y = var(w, "b");
  const Subset& z = var(w, "c");
  if (!k->contains(cluster) || x.count() != 1 || y.count() != 1 || z.count() != 1) return false;
  Subset bset = cluster;
  Subset eset = complement(cluster);
  if (mode.kind == CompatibilityMode::Kind::GClue) {
    const OperatorSuite* ops = s.operators();
    const bool needs_ops = mode.b_rule == BRule::Lower || mode.b_rule == BRule::Upper ||
                           mode.e_rule == ERule::OutsideUpper;
    if (needs_ops && ops == nullptr) return std::nullopt;
    switch (mode.b_rule) {
      case BRule::Self: break;
      case BRule::Lower: bset = ops->lower(cluster); break;
      case BRule::Upper: bset = ops->upper(cluster); break;
      case BRule::OverlapUnion:
        bset = Subset::empty(n);
        for (const auto& o : k->clusters()) {
          if (o != cluster && !meet(o, cluster).is_empty()) bset = join(bset, o);
        }
        break;
    }
    switch (mode.e_rule) {
      case ERule::Complement: break;
      case ERule::OutsideUpper: eset = complement(ops->upper(cluster)); break;
      case ERule::DisjointUnion:
        eset = Subset::empty(n);
        for (const auto& o : k->clusters()) {
          if (meet(o, cluster).is_empty()) eset = join(eset, o);
        }
        break;
    }
  }
  return part_of(x, cluster) && part_of(y, bset) && part_of(z, eset) && !(*d)(x, y, z);
}

}  // namespace

std::optional<bool> replay_witness(const MssStructure& s, const std::string& axiom, const Witness& w,
                                   Trans1Reading reading) {
  if (axiom.rfind("compatibility:", 0) == 0) return replay_compatibility(s, axiom, w);
  const AxiomInfo* info = find_axiom(axiom);
  if (info == nullptr || axiom == "clos1" || !s.bound_all(info->needs)) return std::nullopt;
  for (const auto& v : w.values) {
    if (v.universe_size() != s.universe_size()) throw StructuralError("witness is over a different universe");
  }

  auto P = [&](const Subset& a, const Subset& b) { return s.parthood()->fn(a, b); };
  const Subset bot = s.bottom();
  const Subset top = s.top();

  if (axiom == "PT1") return !P(var(w, "x"), var(w, "x"));
  if (axiom == "PT2") {
    const Subset& x = var(w, "x");
    const Subset& b = var(w, "b");
    return P(x, b) && P(b, x) && x != b;
  }
  if (axiom == "TB") return !(P(bot, var(w, "a")) && P(var(w, "a"), top));
  if (axiom == "UL1" || axiom == "UL2" || axiom == "UL3") {
    const OperatorSuite& ops = *s.operators();
    if (axiom == "UL1") {
      const Subset& a = var(w, "a");
      const Subset l = ops.lower(a);
      const Subset u = ops.upper(a);
      return !(P(l, a) && ops.lower(l) == l && P(u, ops.upper(u)));
    }
    if (axiom == "UL2") {
      const Subset& a = var(w, "a");
      const Subset& b = var(w, "b");
      return P(a, b) && !(P(ops.lower(a), ops.lower(b)) && P(ops.upper(a), ops.upper(b)));
    }
    return !(ops.lower(bot) == bot && ops.upper(bot) == bot && P(ops.lower(top), top) && P(ops.upper(top), top));
  }
  if (axiom.size() == 2 && axiom[0] == 'G') {
    const NamedOperation* jn = s.join_op();
    const NamedOperation* mt = s.meet_op();
    const Subset& a = var(w, "a");
    const Subset& b = var(w, "b");
    if (axiom == "G1") return omega_differs({{jn->fn(a, b), jn->fn(b, a)}, {mt->fn(a, b), mt->fn(b, a)}});
    if (axiom == "G2") return omega_differs({{apply(mt, jn->fn(a, b), a), a}, {apply(jn, mt->fn(a, b), a), a}});
    if (axiom == "G5") {
      const PartialResult j = jn->fn(a, b);
      const PartialResult m = mt->fn(a, b);
      const bool le = s.order()->fn(a, b);
      const bool by_join = j && *j == b;
      const bool by_meet = m && *m == a;
      return !(le == by_join && by_join == by_meet);
    }
    const Subset& c = var(w, "c");
    if (axiom == "G3") return omega_differs({{apply(jn, mt->fn(a, b), c), apply(mt, jn->fn(a, c), jn->fn(b, c))}});
    return omega_differs({{apply(mt, jn->fn(a, b), c), apply(jn, mt->fn(a, c), mt->fn(b, c))}});
  }
  if (auto ax = coherence_axiom_from_string(axiom)) {
    const DeltaPredicate& d = *s.delta();
    const Subset& a = var(w, "a");
    const Subset& b = var(w, "b");
    switch (*ax) {
      case CoherenceAxiom::ICoh: return !d(b, b, a);
      case CoherenceAxiom::ICoh2: return d(a, b, b);
      case CoherenceAxiom::NCoh: return d(a, b, var(w, "c")) && !d(b, a, var(w, "c"));
      case CoherenceAxiom::StrictNCoh: return d(a, b, var(w, "c")) && d(a, var(w, "c"), b);
      case CoherenceAxiom::Trans1: {
        const Subset& c = var(w, "c");
        const Subset& e = var(w, "e");
        const bool aec = d(a, e, c);
        return d(a, b, c) && d(a, e, b) && (reading == Trans1Reading::Literal ? aec : !aec);
      }
    }
  }
  if (axiom == "lclu") {
    const Clustering& k = *s.kappa();
    const Subset& a = var(w, "a");
    return k.contains(a) && !k.contains(s.raw_operators()->lower(a));
  }
  if (axiom.rfind("adm-", 0) == 0) {
    const Granulation& g = *s.granulation();
    const OperatorSuite& ops = *s.operators();
    if (axiom == "adm-representable") {
      const Subset& a = var(w, "A");
      return !(union_of(g, ops.lower(a)) && union_of(g, ops.upper(a)));
    }
    if (axiom == "adm-lower-definite") {
      const Subset& x = var(w, "G");
      return is_granule(g, x) && ops.lower(x) != x;
    }
    const Subset& g1 = var(w, "G1");
    const Subset& g2 = var(w, "G2");
    if (!is_granule(g, g1) || !is_granule(g, g2) || g1 == g2) return false;
    const Subset base = join(g1, g2);
    const std::uint64_t free = full_mask(s.universe_size()) & ~base.bits();
    std::uint64_t sub = free;
    while (true) {
      if (is_definite(Subset(s.universe_size(), base.bits() | sub), ops)) return false;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
    return true;
  }
  const SumOperation& sum = *s.sum();
  if (axiom == "omega*-com") {
    return !omega_star_equal(sum(var(w, "a"), var(w, "b")), sum(var(w, "b"), var(w, "a")));
  }
  if (axiom == "omega-id") {
    const PartialResult aa = sum(var(w, "a"), var(w, "a"));
    return aa && *aa != var(w, "a");
  }
  const Subset& a = var(w, "a");
  const Subset& b = var(w, "b");
  const Subset& c = var(w, "c");
  if (axiom == "omega-asso") {
    const PartialResult bc = sum(b, c);
    const PartialResult ab = sum(a, b);
    const PartialResult lhs = bc ? sum(a, *bc) : std::nullopt;
    const PartialResult rhs = ab ? sum(*ab, c) : std::nullopt;
    return lhs && rhs && *lhs != *rhs;
  }
  // delta-sum1..3
  const DeltaPredicate& d = *s.delta();
  const std::size_t slot = static_cast<std::size_t>(axiom.back() - '1');
  std::array<Subset, 3> t{a, b, c};
  if (!d(t[0], t[1], t[2])) return false;
  const PartialResult doubled = sum(t[slot], t[slot]);
  if (!doubled) return false;
  t[slot] = *doubled;
  return !d(t[0], t[1], t[2]);
}

}  // namespace msslab
