#include "msslab/mss.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "msslab/detail/quantify.hpp"

namespace msslab {

using detail::Outcome;

std::string to_string(Symbol s) {
  switch (s) {
    case Symbol::Carrier: return "carrier";
    case Symbol::Parthood: return "P";
    case Symbol::Delta: return "delta";
    case Symbol::Sum: return "sum";
    case Symbol::Kappa: return "kappa";
    case Symbol::Order: return "leq";
    case Symbol::Join: return "join";
    case Symbol::Meet: return "meet";
    case Symbol::Lower: return "l";
    case Symbol::Upper: return "u";
    case Symbol::Top: return "top";
    case Symbol::Bottom: return "bottom";
    case Symbol::Granulation: return "gamma";
  }
  return "?";
}

std::optional<Symbol> symbol_from_string(const std::string& name) {
  static const std::map<std::string, Symbol> names = {
      {"carrier", Symbol::Carrier}, {"S", Symbol::Carrier},
      {"P", Symbol::Parthood},      {"delta", Symbol::Delta},     {"δ", Symbol::Delta},
      {"sum", Symbol::Sum},         {"⊕", Symbol::Sum},           {"kappa", Symbol::Kappa},
      {"κ", Symbol::Kappa},         {"leq", Symbol::Order},       {"≤", Symbol::Order},
      {"join", Symbol::Join},       {"∨", Symbol::Join},          {"meet", Symbol::Meet},
      {"∧", Symbol::Meet},          {"l", Symbol::Lower},         {"u", Symbol::Upper},
      {"top", Symbol::Top},         {"⊤", Symbol::Top},           {"bottom", Symbol::Bottom},
      {"⊥", Symbol::Bottom},        {"gamma", Symbol::Granulation}, {"γ", Symbol::Granulation},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const Signature& full_signature() {
  static const Signature all = {Symbol::Parthood, Symbol::Delta, Symbol::Sum,   Symbol::Kappa,
                                Symbol::Order,    Symbol::Join,  Symbol::Meet,  Symbol::Lower,
                                Symbol::Upper,    Symbol::Top,   Symbol::Bottom, Symbol::Granulation};
  return all;
}

NamedPredicate inclusion_predicate() {
  return {"inclusion", [](const Subset& a, const Subset& b) { return part_of(a, b); }};
}

NamedOperation union_operation() {
  return {"union", [](const Subset& a, const Subset& b) -> PartialResult { return join(a, b); }};
}

NamedOperation intersection_operation() {
  return {"intersection", [](const Subset& a, const Subset& b) -> PartialResult { return meet(a, b); }};
}

MssComponents MssComponents::standard(Universe u) {
  MssComponents c(std::move(u));
  c.parthood = inclusion_predicate();
  c.order = inclusion_predicate();
  c.join = union_operation();
  c.meet = intersection_operation();
  c.top = true;
  c.bottom = true;
  return c;
}

bool MssStructure::bound_all(const Signature& s) const {
  return std::all_of(s.begin(), s.end(), [&](Symbol x) { return bound(x); });
}

const NamedPredicate* MssStructure::parthood() const {
  return bound(Symbol::Parthood) && parts_->parthood ? &*parts_->parthood : nullptr;
}
const NamedPredicate* MssStructure::order() const {
  return bound(Symbol::Order) && parts_->order ? &*parts_->order : nullptr;
}
const NamedOperation* MssStructure::join_op() const {
  return bound(Symbol::Join) && parts_->join ? &*parts_->join : nullptr;
}
const NamedOperation* MssStructure::meet_op() const {
  return bound(Symbol::Meet) && parts_->meet ? &*parts_->meet : nullptr;
}
const OperatorSuite* MssStructure::operators() const {
  return bound(Symbol::Lower) && bound(Symbol::Upper) && parts_->operators ? &*parts_->operators
                                                                           : nullptr;
}
const OperatorSuite* MssStructure::raw_operators() const {
  return (bound(Symbol::Lower) || bound(Symbol::Upper)) && parts_->operators ? &*parts_->operators
                                                                             : nullptr;
}
const DeltaPredicate* MssStructure::delta() const {
  return bound(Symbol::Delta) && parts_->delta ? &*parts_->delta : nullptr;
}
const SumOperation* MssStructure::sum() const {
  return bound(Symbol::Sum) && parts_->sum ? &*parts_->sum : nullptr;
}
const Clustering* MssStructure::kappa() const {
  return bound(Symbol::Kappa) && parts_->kappa ? &*parts_->kappa : nullptr;
}
const Granulation* MssStructure::granulation() const {
  return bound(Symbol::Granulation) && parts_->granulation ? &*parts_->granulation : nullptr;
}

void MssStructure::validate() const {
  const std::size_t n = universe_->size();
  auto check = [&](bool present, std::size_t size, const char* what) {
    if (present && size != n) {
      throw StructuralError(std::string("mixed universes: ") + what + " is over a universe of size " +
                            std::to_string(size) + ", carrier has " + std::to_string(n));
    }
  };
  const auto& c = *parts_;
  check(c.operators.has_value(), c.operators ? c.operators->universe_size() : 0, "operator suite");
  check(c.delta.has_value(), c.delta ? c.delta->universe_size() : 0, "delta");
  check(c.sum.has_value(), c.sum ? c.sum->universe_size() : 0, "sum");
  check(c.kappa.has_value(), c.kappa ? c.kappa->universe_size() : 0, "kappa");
  check(c.granulation.has_value(), c.granulation ? c.granulation->universe_size() : 0, "granulation");
  if (c.granulation) {
    const Granulation* derived = c.operators ? c.operators->granulation() : nullptr;
    if (derived == nullptr || !(*derived == *c.granulation)) {
      throw StructuralError("granulation is present but the operators are not derived from it");
    }
  }
}

MssStructure assemble(MssComponents c) {
  MssStructure s;
  s.universe_ = std::make_shared<const Universe>(c.universe);
  if (c.parthood) s.bound_.insert(Symbol::Parthood);
  if (c.order) s.bound_.insert(Symbol::Order);
  if (c.join) s.bound_.insert(Symbol::Join);
  if (c.meet) s.bound_.insert(Symbol::Meet);
  if (c.operators) {
    s.bound_.insert(Symbol::Lower);
    s.bound_.insert(Symbol::Upper);
  }
  if (c.top) s.bound_.insert(Symbol::Top);
  if (c.bottom) s.bound_.insert(Symbol::Bottom);
  if (c.delta) s.bound_.insert(Symbol::Delta);
  if (c.sum) s.bound_.insert(Symbol::Sum);
  if (c.kappa) s.bound_.insert(Symbol::Kappa);
  if (c.granulation) s.bound_.insert(Symbol::Granulation);
  s.parts_ = std::make_shared<const MssComponents>(std::move(c));
  s.validate();
  return s;
}

MssStructure MssStructure::with_delta(DeltaPredicate d) const {
  MssComponents c = *parts_;
  c.delta = std::move(d);
  MssStructure out = *this;
  out.parts_ = std::make_shared<const MssComponents>(std::move(c));
  out.bound_.insert(Symbol::Delta);
  out.validate();
  return out;
}

MssStructure MssStructure::with_kappa(Clustering k) const {
  MssComponents c = *parts_;
  c.kappa = std::move(k);
  MssStructure out = *this;
  out.parts_ = std::make_shared<const MssComponents>(std::move(c));
  out.bound_.insert(Symbol::Kappa);
  out.validate();
  return out;
}

MssStructure reduct(const MssStructure& s, const Signature& keep) {
  MssStructure out = s;
  out.bound_.clear();
  for (Symbol x : s.bound_) {
    if (keep.count(x) != 0) out.bound_.insert(x);
  }
  return out;
}

MssStructure reduct_dropping(const MssStructure& s, const Signature& drop) {
  if (drop.count(Symbol::Carrier) != 0) {
    throw StructuralError("a reduct keeps the carrier; it cannot be dropped");
  }
  Signature keep;
  for (Symbol x : s.signature()) {
    if (drop.count(x) == 0) keep.insert(x);
  }
  return reduct(s, keep);
}

const std::vector<AxiomInfo>& axiom_registry() {
  using S = Symbol;
  static const std::vector<AxiomInfo> registry = {
      {"PT1", {S::Parthood}, true},
      {"PT2", {S::Parthood}, true},
      {"G1", {S::Join, S::Meet}, true},
      {"G2", {S::Join, S::Meet}, true},
      {"G3", {S::Join, S::Meet}, true},
      {"G4", {S::Join, S::Meet}, true},
      {"G5", {S::Order, S::Join, S::Meet}, true},
      {"UL1", {S::Parthood, S::Lower, S::Upper}, true},
      {"UL2", {S::Parthood, S::Lower, S::Upper}, true},
      {"UL3", {S::Parthood, S::Lower, S::Upper, S::Top, S::Bottom}, true},
      {"TB", {S::Parthood, S::Top, S::Bottom}, true},
      {"i-coh", {S::Delta}, true},
      {"n-coh", {S::Delta}, true},
      {"i-coh-2", {S::Delta}, true},
      {"trans-1", {S::Delta}, true},
      {"clos1", {}, true},
      {"strict-n-coh", {S::Delta}, false},
      {"lclu", {S::Kappa, S::Lower}, false},
      {"adm-representable", {S::Granulation, S::Lower, S::Upper}, false},
      {"adm-lower-definite", {S::Granulation, S::Lower, S::Upper}, false},
      {"adm-definite-cover", {S::Granulation, S::Lower, S::Upper}, false},
      {"omega*-com", {S::Sum}, false},
      {"omega-id", {S::Sum}, false},
      {"omega-asso", {S::Sum}, false},
      {"delta-sum1", {S::Sum, S::Delta}, false},
      {"delta-sum2", {S::Sum, S::Delta}, false},
      {"delta-sum3", {S::Sum, S::Delta}, false},
  };
  return registry;
}

const AxiomInfo* find_axiom(const std::string& id) {
  for (const auto& a : axiom_registry()) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

namespace {

Outcome require(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

std::string missing_symbols(const MssStructure& s, const Signature& needs) {
  std::string out;
  for (Symbol x : needs) {
    if (s.bound(x)) continue;
    if (!out.empty()) out += ", ";
    out += to_string(x);
  }
  return out;
}

// Compares two partial terms under ω-equality and records whether the
// instance had any defined comparison at all.
struct OmegaTally {
  bool failed = false;
  bool fired = false;
  void compare(const PartialResult& lhs, const PartialResult& rhs) {
    if (!lhs || !rhs) return;
    fired = true;
    if (*lhs != *rhs) failed = true;
  }
  Outcome outcome() const {
    if (failed) return Outcome::Fail;
    return fired ? Outcome::Pass : Outcome::Vacuous;
  }
};

PartialResult apply(const NamedOperation& op, const PartialResult& a, const PartialResult& b) {
  if (!a || !b) return std::nullopt;
  return op.fn(*a, *b);
}

Verdict check_lattice_axiom(const MssStructure& s, const std::string& id, const CheckOptions& opt) {
  const std::size_t n = s.universe_size();
  const NamedOperation& jn = *s.join_op();
  const NamedOperation& mt = *s.meet_op();
  if (id == "G1") {
    auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
      const auto& [a, b] = t;
      OmegaTally tally;
      tally.compare(jn.fn(a, b), jn.fn(b, a));
      tally.compare(mt.fn(a, b), mt.fn(b, a));
      return tally.outcome();
    });
    return detail::to_verdict<2>(id, r, {"a", "b"}, false, opt);
  }
  if (id == "G2") {
    auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
      const auto& [a, b] = t;
      OmegaTally tally;
      tally.compare(apply(mt, jn.fn(a, b), a), a);
      tally.compare(apply(jn, mt.fn(a, b), a), a);
      return tally.outcome();
    });
    return detail::to_verdict<2>(id, r, {"a", "b"}, false, opt);
  }
  if (id == "G3" || id == "G4") {
    const bool g3 = id == "G3";
    const NamedOperation& outer = g3 ? jn : mt;  // (a ∧ b) ∨ c   /  (a ∨ b) ∧ c
    const NamedOperation& inner = g3 ? mt : jn;
    auto r = detail::scan<3>(n, opt, [&](const std::array<Subset, 3>& t) {
      const auto& [a, b, c] = t;
      OmegaTally tally;
      tally.compare(apply(outer, inner.fn(a, b), c), apply(inner, outer.fn(a, c), outer.fn(b, c)));
      return tally.outcome();
    });
    return detail::to_verdict<3>(id, r, {"a", "b", "c"}, false, opt);
  }
  // G5: a ≤ b  <->  a ∨ b = b  <->  a ∧ b = a
  const NamedPredicate& leq = *s.order();
  auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
    const auto& [a, b] = t;
    const bool le = leq.fn(a, b);
    const PartialResult j = jn.fn(a, b);
    const PartialResult m = mt.fn(a, b);
    const bool by_join = j && *j == b;
    const bool by_meet = m && *m == a;
    return require(le == by_join && by_join == by_meet);
  });
  return detail::to_verdict<2>(id, r, {"a", "b"}, false, opt);
}

Verdict check_structural(const MssStructure& s, const std::string& id, const CheckOptions& opt) {
  const std::size_t n = s.universe_size();
  const auto& P = s.parthood()->fn;
  if (id == "PT1") {
    auto r = detail::scan<1>(n, opt, [&](const std::array<Subset, 1>& t) { return require(P(t[0], t[0])); });
    return detail::to_verdict<1>(id, r, {"x"}, false, opt);
  }
  if (id == "PT2") {
    auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
      const auto& [x, b] = t;
      if (!(P(x, b) && P(b, x))) return Outcome::Vacuous;
      return require(x == b);
    });
    return detail::to_verdict<2>(id, r, {"x", "b"}, true, opt);
  }
  if (id == "TB") {
    const Subset bot = s.bottom();
    const Subset top = s.top();
    auto r = detail::scan<1>(n, opt, [&](const std::array<Subset, 1>& t) {
      return require(P(bot, t[0]) && P(t[0], top));
    });
    return detail::to_verdict<1>(id, r, {"a"}, false, opt);
  }
  const OperatorSuite& ops = *s.operators();
  if (id == "UL1") {
    auto r = detail::scan<1>(n, opt, [&](const std::array<Subset, 1>& t) {
      const Subset& a = t[0];
      const Subset l = ops.lower(a);
      const Subset u = ops.upper(a);
      return require(P(l, a) && ops.lower(l) == l && P(u, ops.upper(u)));
    });
    return detail::to_verdict<1>(id, r, {"a"}, false, opt);
  }
  if (id == "UL2") {
    auto r = detail::scan<2>(n, opt, [&](const std::array<Subset, 2>& t) {
      const auto& [a, b] = t;
      if (!P(a, b)) return Outcome::Vacuous;
      return require(P(ops.lower(a), ops.lower(b)) && P(ops.upper(a), ops.upper(b)));
    });
    return detail::to_verdict<2>(id, r, {"a", "b"}, true, opt);
  }
  // UL3
  const Subset bot = s.bottom();
  const Subset top = s.top();
  auto r = detail::scan<0>(n, opt, [&](const std::array<Subset, 0>&) {
    return require(ops.lower(bot) == bot && ops.upper(bot) == bot && P(ops.lower(top), top) &&
                   P(ops.upper(top), top));
  });
  return detail::to_verdict<0>(id, r, {}, false, opt);
}

Verdict check_lclu(const MssStructure& s) {
  const Clustering& k = *s.kappa();
  const OperatorSuite& ops = *s.raw_operators();
  Verdict v;
  v.axiom = "lclu";
  std::optional<Subset> worst;
  for (const auto& c : k.clusters()) {
    ++v.instances_checked;
    if (!k.contains(ops.lower(c)) && (!worst || lex_less(c, *worst))) worst = c;
  }
  if (worst) {
    v.status = Status::Fails;
    v.witnesses.push_back({{"a"}, {*worst}});
  }
  v.note = "quantified over the clusters of kappa";
  return v;
}

}  // namespace

std::vector<Verdict> verify(const MssStructure& s, const std::vector<std::string>& axioms,
                            const VerifyOptions& opt) {
  std::vector<std::string> ids = axioms;
  if (ids.empty()) {
    for (const auto& a : axiom_registry()) ids.push_back(a.id);
  }
  std::vector<Verdict> out;
  std::optional<AdmissibilityVerdict> admissibility;
  std::optional<std::vector<Verdict>> sum_results;
  std::optional<std::vector<Verdict>> delta_sum_results;
  for (const auto& id : ids) {
    const AxiomInfo* info = find_axiom(id);
    if (info == nullptr) throw ConfigurationError("unknown axiom '" + id + "'");
    if (id == "clos1") {
      Verdict v;
      v.axiom = id;
      v.status = Status::Unspecified;
      v.note = "named in the definition without a statement; not evaluated";
      out.push_back(std::move(v));
      continue;
    }
    if (!s.bound_all(info->needs)) {
      out.push_back(deferred_verdict(id, missing_symbols(s, info->needs)));
      continue;
    }
    if (id == "PT1" || id == "PT2" || id == "TB" || id.rfind("UL", 0) == 0) {
      out.push_back(check_structural(s, id, opt.check));
    } else if (id.front() == 'G') {
      out.push_back(check_lattice_axiom(s, id, opt.check));
    } else if (auto ax = coherence_axiom_from_string(id)) {
      out.push_back(check_coherence(*s.delta(), *ax, opt.check, opt.trans1));
    } else if (id == "lclu") {
      out.push_back(check_lclu(s));
    } else if (id.rfind("adm-", 0) == 0) {
      if (!admissibility) admissibility = check_admissibility(*s.granulation(), *s.operators(), opt.check);
      if (id == "adm-representable") out.push_back(admissibility->representable);
      if (id == "adm-lower-definite") out.push_back(admissibility->lower_definite);
      if (id == "adm-definite-cover") out.push_back(admissibility->definite_cover);
    } else {
      const bool needs_delta = id.rfind("delta-sum", 0) == 0;
      auto& cache = needs_delta ? delta_sum_results : sum_results;
      if (!cache) {
        cache = needs_delta ? check_sum_axioms(*s.delta(), *s.sum(), opt.check)
                            : check_sum_laws(*s.sum(), opt.check);
      }
      for (const auto& v : *cache) {
        if (v.axiom == id) out.push_back(v);
      }
    }
  }
  return out;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Deferred: return "deferred";
  }
  return "?";
}

namespace {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Deferred || b == Tri::Deferred) return Tri::Deferred;
  return Tri::True;
}

Tri tri_of(const std::vector<Verdict>& verdicts, const std::string& id) {
  for (const auto& v : verdicts) {
    if (v.axiom != id) continue;
    if (v.status == Status::Fails) return Tri::False;
    if (v.status == Status::Deferred) return Tri::Deferred;
    return Tri::True;
  }
  return Tri::Deferred;
}

}  // namespace

Classification classify(const MssStructure& s, const std::vector<Verdict>& verdicts) {
  Classification c;
  Tri mss = Tri::True;
  for (const auto& a : axiom_registry()) {
    if (!a.in_definition || a.id == "clos1") continue;
    mss = tri_and(mss, tri_of(verdicts, a.id));
  }
  c.is_mss = mss;
  c.is_strict = tri_and(mss, tri_of(verdicts, "strict-n-coh"));
  c.is_rough = s.kappa() == nullptr ? Tri::Deferred : tri_and(mss, tri_of(verdicts, "lclu"));
  if (s.granulation() == nullptr) {
    c.is_gmss = Tri::False;
  } else {
    Tri adm = tri_and(tri_of(verdicts, "adm-representable"),
                      tri_and(tri_of(verdicts, "adm-lower-definite"), tri_of(verdicts, "adm-definite-cover")));
    c.is_gmss = tri_and(mss, adm);
  }
  return c;
}

Classification classify(const MssStructure& s, const VerifyOptions& opt) {
  return classify(s, verify(s, {}, opt));
}

}  // namespace msslab
