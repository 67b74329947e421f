#include "msslab/oracle.hpp"

#include <algorithm>
#include <functional>

namespace msslab::oracle {

namespace {

using Set = std::vector<bool>;

Set to_set(const Subset& s) {
  Set out(s.universe_size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((s.bits() >> i) & 1U) != 0;
  return out;
}

Subset to_subset(const Set& s) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) members.push_back(i);
  }
  std::uint64_t bits = 0;
  for (auto m : members) bits += std::uint64_t{1} << m;
  return {s.size(), bits};
}

Set set_union(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

Set set_inter(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

Set set_minus(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && !b[i];
  return out;
}

bool subset_of(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

bool proper_subset_of(const Set& a, const Set& b) { return subset_of(a, b) && a != b; }

bool disjoint(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

// Depth-first: emit the current list, then extend with each larger index.
// This visits sorted member lists in lexicographic order.
void powerset_from(std::size_t n, std::size_t next, Set& cur, std::vector<Set>& out) {
  out.push_back(cur);
  for (std::size_t i = next; i < n; ++i) {
    cur[i] = true;
    powerset_from(n, i + 1, cur, out);
    cur[i] = false;
  }
}

std::vector<Set> powerset(std::size_t n) {
  if (n > 10) throw ConfigurationError("oracle enumerates universes of at most 10 elements");
  std::vector<Set> out;
  Set cur(n, false);
  powerset_from(n, 0, cur, out);
  return out;
}

// The view of a structure the oracle evaluates against. Inclusion, union
// and intersection are recomputed directly; approximations come from the
// granule list whenever one exists.
struct Model {
  std::size_t n = 0;
  std::vector<Set> granules;
  bool has_granules = false;
  const OperatorSuite* ops = nullptr;
  const MssStructure* s = nullptr;

  explicit Model(const MssStructure& st) : n(st.universe_size()), s(&st) {
    ops = st.raw_operators();
    const Granulation* g = ops != nullptr ? ops->granulation() : nullptr;
    if (g != nullptr) {
      has_granules = true;
      for (const auto& x : g->granules()) granules.push_back(to_set(x));
    }
  }

  Set lower(const Set& a) const {
    if (!has_granules) return to_set(ops->lower(to_subset(a)));
    Set out(n, false);
    for (const auto& g : granules) {
      if (subset_of(g, a)) out = set_union(out, g);
    }
    return out;
  }

  Set upper(const Set& a) const {
    if (!has_granules) return to_set(ops->upper(to_subset(a)));
    Set out(n, false);
    for (const auto& g : granules) {
      if (!disjoint(g, a)) out = set_union(out, g);
    }
    return out;
  }

  bool parthood(const Set& a, const Set& b) const {
    const NamedPredicate& p = *s->parthood();
    if (p.name == "inclusion") return subset_of(a, b);
    return p.fn(to_subset(a), to_subset(b));
  }

  bool order(const Set& a, const Set& b) const {
    const NamedPredicate& p = *s->order();
    if (p.name == "inclusion") return subset_of(a, b);
    return p.fn(to_subset(a), to_subset(b));
  }

  std::optional<Set> apply(const NamedOperation& op, const std::optional<Set>& a,
                           const std::optional<Set>& b) const {
    if (!a || !b) return std::nullopt;
    if (op.name == "union") return set_union(*a, *b);
    if (op.name == "intersection") return set_inter(*a, *b);
    auto r = op.fn(to_subset(*a), to_subset(*b));
    if (!r) return std::nullopt;
    return to_set(*r);
  }

  std::optional<Set> sum(const Set& a, const Set& b) const {
    const SumOperation& op = *s->sum();
    switch (op.mode()) {
      case SumOperation::Mode::TotalUnion: return set_union(a, b);
      case SumOperation::Mode::GranularSum: {
        // defined iff a ∪ b is covered by the granules inside it
        const Set ab = set_union(a, b);
        Set covered(n, false);
        for (const auto& g : op.granulation()->granules()) {
          const Set gs = to_set(g);
          if (subset_of(gs, ab)) covered = set_union(covered, gs);
        }
        if (covered != ab) return std::nullopt;
        return ab;
      }
      case SumOperation::Mode::ExtensionalPartial: {
        auto it = op.table()->find({to_subset(a).bits(), to_subset(b).bits()});
        if (it == op.table()->end()) return std::nullopt;
        return to_set(it->second);
      }
    }
    return std::nullopt;
  }

  bool delta(const Set& a, const Set& b, const Set& c) const {
    const DeltaPredicate& d = *s->delta();
    switch (d.kind()) {
      case DeltaKind::E0: return subset_of(set_union(a, b), set_union(a, c));
      case DeltaKind::E1: return proper_subset_of(set_union(a, b), set_union(a, c));
      case DeltaKind::E2:
      case DeltaKind::UE1: {
        Model local = *this;
        local.ops = d.operators();
        local.has_granules = false;
        local.granules.clear();
        if (const Granulation* g = local.ops->granulation()) {
          local.has_granules = true;
          for (const auto& x : g->granules()) local.granules.push_back(to_set(x));
        }
        if (d.kind() == DeltaKind::E2) {
          return proper_subset_of(local.lower(set_inter(a, c)), local.lower(set_inter(a, b)));
        }
        return subset_of(local.upper(set_union(a, b)), local.upper(set_union(a, c)));
      }
      case DeltaKind::Def0: {
        const NearnessMap& f = *d.nearness_map();
        return subset_of(to_set(f(to_subset(a), to_subset(b))), to_set(f(to_subset(a), to_subset(c))));
      }
      case DeltaKind::Extensional:
        return d.table()->contains(to_subset(a), to_subset(b), to_subset(c));
    }
    return false;
  }
};

// Collects outcomes in enumeration order; the first failure is the
// lexicographically least witness because the loops nest in variable order.
struct Tally {
  std::vector<std::string> vars;
  bool fired = false;
  std::optional<std::vector<Set>> failure;

  void pass() { fired = true; }
  void vacuous() {}
  void fail(std::vector<Set> values) {
    fired = true;
    if (!failure) failure = std::move(values);
  }
  void check(bool ok, std::vector<Set> values) {
    if (ok) {
      pass();
    } else {
      fail(std::move(values));
    }
  }
  void implication(bool antecedent, bool consequent, std::vector<Set> values) {
    if (!antecedent) return;
    check(consequent, std::move(values));
  }

  OracleVerdict result() const {
    OracleVerdict v;
    if (failure) {
      v.status = Status::Fails;
      Witness w;
      w.variables = vars;
      for (const auto& x : *failure) w.values.push_back(to_subset(x));
      v.witness = std::move(w);
    } else {
      v.status = fired ? Status::Holds : Status::Vacuous;
    }
    return v;
  }
};

bool binds(const MssStructure& s, std::initializer_list<Symbol> needs) {
  return std::all_of(needs.begin(), needs.end(), [&](Symbol x) { return s.bound(x); });
}

// ω-equality over partial terms, counting only comparisons where both sides
// are defined.
struct PartialCompare {
  bool defined = false;
  bool equal = true;
  void operator()(const std::optional<Set>& x, const std::optional<Set>& y) {
    if (!x || !y) return;
    defined = true;
    if (*x != *y) equal = false;
  }
};

std::optional<OracleVerdict> recompute_impl(const MssStructure& s, const std::string& id) {
  using S = Symbol;
  const Model m(s);
  const std::vector<Set> ps = powerset(m.n);
  const Set bot(m.n, false);
  const Set top(m.n, true);
  Tally t;

  if (id == "PT1" && binds(s, {S::Parthood})) {
    t.vars = {"x"};
    for (const auto& x : ps) t.check(m.parthood(x, x), {x});
    return t.result();
  }
  if (id == "PT2" && binds(s, {S::Parthood})) {
    t.vars = {"x", "b"};
    for (const auto& x : ps) {
      for (const auto& b : ps) t.implication(m.parthood(x, b) && m.parthood(b, x), x == b, {x, b});
    }
    return t.result();
  }
  if (id == "TB" && binds(s, {S::Parthood, S::Top, S::Bottom})) {
    t.vars = {"a"};
    for (const auto& a : ps) t.check(m.parthood(bot, a) && m.parthood(a, top), {a});
    return t.result();
  }
  if ((id == "UL1" || id == "UL2" || id == "UL3") && binds(s, {S::Parthood, S::Lower, S::Upper})) {
    if (id == "UL1") {
      t.vars = {"a"};
      for (const auto& a : ps) {
        const Set l = m.lower(a);
        const Set u = m.upper(a);
        t.check(m.parthood(l, a) && m.lower(l) == l && m.parthood(u, m.upper(u)), {a});
      }
    } else if (id == "UL2") {
      t.vars = {"a", "b"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          t.implication(m.parthood(a, b),
                        m.parthood(m.lower(a), m.lower(b)) && m.parthood(m.upper(a), m.upper(b)), {a, b});
        }
      }
    } else {
      if (!binds(s, {S::Top, S::Bottom})) return std::nullopt;
      t.check(m.lower(bot) == bot && m.upper(bot) == bot && m.parthood(m.lower(top), top) &&
                  m.parthood(m.upper(top), top),
              {});
    }
    return t.result();
  }
  if (id.size() == 2 && id[0] == 'G' && binds(s, {S::Join, S::Meet})) {
    const NamedOperation& jn = *s.join_op();
    const NamedOperation& mt = *s.meet_op();
    auto J = [&](const std::optional<Set>& a, const std::optional<Set>& b) { return m.apply(jn, a, b); };
    auto M = [&](const std::optional<Set>& a, const std::optional<Set>& b) { return m.apply(mt, a, b); };
    if (id == "G1" || id == "G2") {
      t.vars = {"a", "b"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          PartialCompare cmp;
          if (id == "G1") {
            cmp(J(a, b), J(b, a));
            cmp(M(a, b), M(b, a));
          } else {
            cmp(M(J(a, b), a), a);
            cmp(J(M(a, b), a), a);
          }
          if (!cmp.defined) continue;
          t.check(cmp.equal, {a, b});
        }
      }
      return t.result();
    }
    if (id == "G3" || id == "G4") {
      t.vars = {"a", "b", "c"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            PartialCompare cmp;
            if (id == "G3") {
              cmp(J(M(a, b), c), M(J(a, c), J(b, c)));
            } else {
              cmp(M(J(a, b), c), J(M(a, c), M(b, c)));
            }
            if (!cmp.defined) continue;
            t.check(cmp.equal, {a, b, c});
          }
        }
      }
      return t.result();
    }
    if (id == "G5" && s.bound(S::Order)) {
      t.vars = {"a", "b"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          const auto j = J(a, b);
          const auto mm = M(a, b);
          const bool le = m.order(a, b);
          const bool by_join = j && *j == b;
          const bool by_meet = mm && *mm == a;
          t.check(le == by_join && by_join == by_meet, {a, b});
        }
      }
      return t.result();
    }
    return std::nullopt;
  }
  if (binds(s, {S::Delta})) {
    if (id == "i-coh" || id == "i-coh-2") {
      t.vars = {"a", "b"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          t.check(id == "i-coh" ? m.delta(b, b, a) : !m.delta(a, b, b), {a, b});
        }
      }
      return t.result();
    }
    if (id == "n-coh" || id == "strict-n-coh") {
      t.vars = {"a", "b", "c"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            const bool cons = id == "n-coh" ? m.delta(b, a, c) : !m.delta(a, c, b);
            t.implication(m.delta(a, b, c), cons, {a, b, c});
          }
        }
      }
      return t.result();
    }
    if (id == "trans-1") {
      if (m.n > 4) return std::nullopt;
      t.vars = {"a", "b", "c", "e"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            if (!m.delta(a, b, c)) continue;
            for (const auto& e : ps) {
              t.implication(m.delta(a, e, b), !m.delta(a, e, c), {a, b, c, e});
            }
          }
        }
      }
      return t.result();
    }
  }
  if (id == "lclu" && binds(s, {S::Kappa, S::Lower})) {
    const Clustering& k = *s.kappa();
    auto in_kappa = [&](const Set& x) {
      return std::any_of(k.clusters().begin(), k.clusters().end(),
                         [&](const Subset& c) { return to_set(c) == x; });
    };
    t.vars = {"a"};
    for (const auto& a : ps) {
      if (!in_kappa(a)) continue;
      t.check(in_kappa(m.lower(a)), {a});
    }
    return t.result();
  }
  if (id.rfind("adm-", 0) == 0 && binds(s, {S::Granulation, S::Lower, S::Upper})) {
    std::vector<Set> gs;
    for (const auto& g : s.granulation()->granules()) gs.push_back(to_set(g));
    auto is_granule = [&](const Set& x) { return std::find(gs.begin(), gs.end(), x) != gs.end(); };
    auto union_of_granules = [&](const Set& x) {
      Set covered(m.n, false);
      for (const auto& g : gs) {
        if (subset_of(g, x)) covered = set_union(covered, g);
      }
      return covered == x;
    };
    if (id == "adm-representable") {
      t.vars = {"A"};
      for (const auto& a : ps) t.check(union_of_granules(m.lower(a)) && union_of_granules(m.upper(a)), {a});
      return t.result();
    }
    if (id == "adm-lower-definite") {
      t.vars = {"G"};
      for (const auto& g : ps) {
        if (is_granule(g)) t.check(m.lower(g) == g, {g});
      }
      return t.result();
    }
    if (id == "adm-definite-cover") {
      t.vars = {"G1", "G2"};
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!is_granule(ps[i])) continue;
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          if (!is_granule(ps[j])) continue;
          const Set need = set_union(ps[i], ps[j]);
          const bool found = std::any_of(ps.begin(), ps.end(), [&](const Set& d) {
            return subset_of(need, d) && m.lower(d) == d && m.upper(d) == d;
          });
          t.check(found, {ps[i], ps[j]});
        }
      }
      return t.result();
    }
    return std::nullopt;
  }
  if (binds(s, {S::Sum})) {
    if (id == "omega*-com") {
      t.vars = {"a", "b"};
      for (const auto& a : ps) {
        for (const auto& b : ps) t.check(m.sum(a, b) == m.sum(b, a), {a, b});
      }
      return t.result();
    }
    if (id == "omega-id") {
      t.vars = {"a"};
      for (const auto& a : ps) {
        const auto aa = m.sum(a, a);
        if (aa) t.check(*aa == a, {a});
      }
      return t.result();
    }
    if (id == "omega-asso") {
      t.vars = {"a", "b", "c"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            const auto bc = m.sum(b, c);
            const auto ab = m.sum(a, b);
            const auto lhs = bc ? m.sum(a, *bc) : std::nullopt;
            const auto rhs = ab ? m.sum(*ab, c) : std::nullopt;
            if (lhs && rhs) t.check(*lhs == *rhs, {a, b, c});
          }
        }
      }
      return t.result();
    }
    if (id.rfind("delta-sum", 0) == 0 && id.size() == 10 && s.bound(S::Delta)) {
      const std::size_t slot = static_cast<std::size_t>(id.back() - '1');
      if (slot > 2) return std::nullopt;
      t.vars = {"a", "b", "c"};
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            if (!m.delta(a, b, c)) continue;
            std::vector<Set> args = {a, b, c};
            const auto doubled = m.sum(args[slot], args[slot]);
            if (!doubled) continue;
            args[slot] = *doubled;
            t.check(m.delta(args[0], args[1], args[2]), {a, b, c});
          }
        }
      }
      return t.result();
    }
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& claims() {
  static const std::vector<std::string> ids = {"l-pre-valid-closed-form", "upper-additivity",
                                               "approximation-laws", "proposition-def2",
                                               "overlap-closer"};
  return ids;
}

bool oracle_check(const MssStructure& s, const std::string& claim) {
  if (std::find(claims().begin(), claims().end(), claim) == claims().end()) {
    throw ConfigurationError("unknown oracle claim '" + claim + "'");
  }
  const Model m(s);
  if (claim == "approximation-laws") {
    for (const char* id : {"UL1", "UL2", "UL3", "TB"}) {
      auto v = recompute_impl(s, id);
      if (!v) throw ConfigurationError("approximation-laws needs P, l, u, top and bottom");
      if (v->status == Status::Fails) return false;
    }
    return true;
  }
  if (claim == "overlap-closer") {
    if (s.kappa() == nullptr || s.delta() == nullptr) {
      throw ConfigurationError("overlap-closer needs kappa and delta");
    }
    std::vector<Set> cl;
    for (const auto& c : s.kappa()->clusters()) cl.push_back(to_set(c));
    for (const auto& a : cl) {
      for (const auto& b : cl) {
        for (const auto& c : cl) {
          if (a == b || b == c || a == c) continue;
          if (disjoint(a, b) || !disjoint(a, c)) continue;
          if (!m.delta(a, b, c)) return false;
        }
      }
    }
    return true;
  }
  if (s.operators() == nullptr) throw ConfigurationError(claim + " needs l and u");
  const std::vector<Set> ps = powerset(m.n);
  if (claim == "l-pre-valid-closed-form") {
    for (const auto& c : ps) {
      const bool has_preimage = std::any_of(ps.begin(), ps.end(), [&](const Set& v) { return m.lower(v) == c; });
      if (has_preimage != (m.lower(c) == c)) return false;
    }
    return true;
  }
  if (claim == "upper-additivity") {
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        if (m.upper(set_union(a, b)) != set_union(m.upper(a), m.upper(b))) return false;
      }
    }
    return true;
  }
  // proposition-def2: under the containment policy both deficits are
  // defined for every C, and each is an element of the carrier.
  for (const auto& c : ps) {
    const Set l = m.lower(c);
    const Set u = m.upper(c);
    if (subset_of(l, c)) {
      const Set d = m.upper(set_minus(c, l));
      if (d.size() != m.n) return false;
    }
    if (subset_of(c, u)) {
      const Set d = m.upper(set_minus(u, c));
      if (d.size() != m.n) return false;
    }
  }
  return true;
}

std::optional<OracleVerdict> recompute_axiom(const MssStructure& s, const std::string& axiom) {
  return recompute_impl(s, axiom);
}

}  // namespace msslab::oracle
