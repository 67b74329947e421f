#include "msslab/validation.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "msslab/detail/quantify.hpp"

namespace msslab {

using detail::Outcome;

PartialResult lower_deficit(const Subset& c, const OperatorSuite& ops, DifferencePolicy policy) {
  const PartialResult diff = partial_difference(c, ops.lower(c), policy);
  if (!diff) return std::nullopt;
  return ops.upper(*diff);
}

PartialResult upper_deficit(const Subset& c, const OperatorSuite& ops, DifferencePolicy policy) {
  const PartialResult diff = partial_difference(ops.upper(c), c, policy);
  if (!diff) return std::nullopt;
  return ops.upper(*diff);
}

namespace {

// Membership of an operator result in the carrier.
bool in_carrier(const Subset& s, std::size_t n) { return s.universe_size() == n; }

// Lex-least V with op(V) = target.
template <class Op>
std::optional<Subset> find_preimage(const Subset& target, const Op& op, const CheckOptions& opt,
                                    bool& sampled) {
  const std::size_t n = target.universe_size();
  std::optional<Subset> best;
  auto consider = [&](const Subset& v) {
    if (op(v) == target && (!best || lex_less(v, *best))) best = v;
  };
  if (n <= kMaxPreimageSearchUniverse) {
    for (std::uint64_t b = 0; b <= full_mask(n); ++b) consider(Subset(n, b));
    return best;
  }
  sampled = true;
  consider(target);
  for (std::uint64_t i = 0; i < opt.sample_budget; ++i) consider(detail::sampled_subset(n, opt.seed, i, 0));
  return best;
}

}  // namespace

ClusterGrades validity_grades(const Subset& c, const OperatorSuite& ops, DifferencePolicy policy,
                              const CheckOptions& opt) {
  if (c.universe_size() != ops.universe_size()) {
    throw StructuralError("cluster and operators are over different universes");
  }
  const std::size_t n = c.universe_size();
  ClusterGrades g;
  g.cluster = c;
  g.lower_deficit = lower_deficit(c, ops, policy);
  g.upper_deficit = upper_deficit(c, ops, policy);
  const Subset l = ops.lower(c);
  const Subset u = ops.upper(c);
  g.lu_valid = l == c && u == c;
  g.l_pre_valid_closed_form = l == c;
  g.l_pre_witness = find_preimage(c, [&](const Subset& v) { return ops.lower(v); }, opt, g.sampled);
  g.u_pre_witness = find_preimage(c, [&](const Subset& v) { return ops.upper(v); }, opt, g.sampled);
  g.l_pre_valid = g.l_pre_witness.has_value();
  g.u_pre_valid = g.u_pre_witness.has_value();
  g.l_traceable = in_carrier(l, n);
  g.u_traceable = in_carrier(u, n);
  return g;
}

ValidityReport validate_clustering(const Clustering& cl, const OperatorSuite& ops, DifferencePolicy policy,
                                   const CheckOptions& opt) {
  ValidityReport r;
  r.lu_valid = r.l_pre_valid = r.u_pre_valid = r.l_traceable = r.u_traceable = true;
  for (const auto& c : cl.clusters()) {
    ClusterGrades g = validity_grades(c, ops, policy, opt);
    r.lu_valid = r.lu_valid && g.lu_valid;
    r.l_pre_valid = r.l_pre_valid && g.l_pre_valid;
    r.u_pre_valid = r.u_pre_valid && g.u_pre_valid;
    r.l_traceable = r.l_traceable && g.l_traceable;
    r.u_traceable = r.u_traceable && g.u_traceable;
    r.clusters.push_back(std::move(g));
  }
  return r;
}

namespace {

Outcome proposition_instance(const Subset& c, const OperatorSuite& ops, DifferencePolicy policy,
                             bool& fired) {
  const std::size_t n = c.universe_size();
  bool ok = true;
  if (lower_deficit(c, ops, policy)) {
    fired = true;
    ok = ok && in_carrier(ops.lower(c), n);
  }
  if (upper_deficit(c, ops, policy)) {
    fired = true;
    ok = ok && in_carrier(ops.upper(c), n);
  }
  if (!fired) return Outcome::Vacuous;
  return ok ? Outcome::Pass : Outcome::Fail;
}

constexpr const char* kTraceNote =
    "traceability only asks that the approximation be an element of the carrier, which holds for "
    "every total operator";

}  // namespace

Verdict check_proposition(const Subset& c, const OperatorSuite& ops, DifferencePolicy policy) {
  Verdict v;
  v.axiom = "proposition-deficit-traceable";
  v.instances_checked = 1;
  bool fired = false;
  switch (proposition_instance(c, ops, policy, fired)) {
    case Outcome::Vacuous: v.status = Status::Vacuous; break;
    case Outcome::Pass: v.status = Status::Holds; break;
    case Outcome::Fail:
      v.status = Status::Fails;
      v.witnesses.push_back({{"C"}, {c}});
      break;
  }
  v.note = kTraceNote;
  return v;
}

Verdict check_proposition_all(const OperatorSuite& ops, DifferencePolicy policy, const CheckOptions& opt) {
  auto r = detail::scan<1>(ops.universe_size(), opt, [&](const std::array<Subset, 1>& t) {
    bool fired = false;
    return proposition_instance(t[0], ops, policy, fired);
  });
  Verdict v = detail::to_verdict<1>("proposition-deficit-traceable", r, {"C"}, true, opt);
  v.note = kTraceNote;
  return v;
}

namespace {

const char* to_string(BRule b) {
  switch (b) {
    case BRule::Self: return "self";
    case BRule::Lower: return "lower";
    case BRule::Upper: return "upper";
    case BRule::OverlapUnion: return "overlap-union";
  }
  return "?";
}

const char* to_string(ERule e) {
  switch (e) {
    case ERule::Complement: return "complement";
    case ERule::OutsideUpper: return "outside-upper";
    case ERule::DisjointUnion: return "disjoint-union";
  }
  return "?";
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

const OperatorSuite& need_ops(const OperatorSuite* ops, const CompatibilityMode& mode) {
  if (ops == nullptr) throw ConfigurationError(mode.name() + " needs approximation operators");
  return *ops;
}

Subset apply_b_rule(const CompatibilityMode& mode, const Clustering& cl, const Subset& a,
                    const OperatorSuite* ops) {
  switch (mode.b_rule) {
    case BRule::Self: return a;
    case BRule::Lower: return need_ops(ops, mode).lower(a);
    case BRule::Upper: return need_ops(ops, mode).upper(a);
    case BRule::OverlapUnion: {
      Subset acc = Subset::empty(a.universe_size());
      for (const auto& other : cl.clusters()) {
        if (other != a && !meet(other, a).is_empty()) acc = join(acc, other);
      }
      return acc;
    }
  }
  return a;
}

Subset apply_e_rule(const CompatibilityMode& mode, const Clustering& cl, const Subset& a,
                    const OperatorSuite* ops) {
  switch (mode.e_rule) {
    case ERule::Complement: return complement(a);
    case ERule::OutsideUpper: return complement(need_ops(ops, mode).upper(a));
    case ERule::DisjointUnion: {
      Subset acc = Subset::empty(a.universe_size());
      for (const auto& other : cl.clusters()) {
        if (meet(other, a).is_empty()) acc = join(acc, other);
      }
      return acc;
    }
  }
  return complement(a);
}

}  // namespace

std::string CompatibilityMode::name() const {
  switch (kind) {
    case Kind::OverlapCloser: return "overlap-closer";
    case Kind::ClueSingleton: return "clue-singleton";
    case Kind::GClue: return std::string("gclue(") + to_string(b_rule) + "," + to_string(e_rule) + ")";
  }
  return "?";
}

CompatibilityMode CompatibilityMode::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t == "overlap-closer") return overlap_closer();
  if (t == "clue-singleton") return clue_singleton();
  if (t.rfind("gclue(", 0) == 0 && t.back() == ')') {
    const std::string inner = t.substr(6, t.size() - 7);
    const auto comma = inner.find(',');
    if (comma != std::string::npos) {
      const std::string b = trim(inner.substr(0, comma));
      const std::string e = trim(inner.substr(comma + 1));
      std::optional<BRule> br;
      std::optional<ERule> er;
      for (auto r : {BRule::Self, BRule::Lower, BRule::Upper, BRule::OverlapUnion}) {
        if (b == to_string(r)) br = r;
      }
      for (auto r : {ERule::Complement, ERule::OutsideUpper, ERule::DisjointUnion}) {
        if (e == to_string(r)) er = r;
      }
      if (br && er) return gclue(*br, *er);
    }
  }
  throw ConfigurationError("unknown compatibility mode '" + text + "'");
}

Verdict check_compatibility(const Clustering& cl, const DeltaPredicate& d, const CompatibilityMode& mode,
                            const OperatorSuite* ops) {
  if (cl.universe_size() != d.universe_size()) {
    throw StructuralError("clustering and delta are over different universes");
  }
  const std::size_t n = cl.universe_size();
  Verdict v;
  v.axiom = "compatibility:" + mode.name() + ":" + d.name();
  std::optional<std::array<Subset, 4>> worst;
  std::uint64_t fired = 0;
  auto record = [&](const std::array<Subset, 4>& t) {
    if (!worst || detail::tuple_less<4>(t, *worst)) worst = t;
  };
  const auto& cs = cl.clusters();

  if (mode.kind == CompatibilityMode::Kind::OverlapCloser) {
    for (const auto& a : cs) {
      for (const auto& b : cs) {
        for (const auto& c : cs) {
          if (a == b || a == c || b == c) continue;
          ++v.instances_checked;
          if (meet(a, b).is_empty() || !meet(a, c).is_empty()) continue;
          ++fired;
          if (!d(a, b, c)) record({a, b, c, Subset::empty(n)});
        }
      }
    }
  } else {
    for (const auto& cluster : cs) {
      const Subset bset = mode.kind == CompatibilityMode::Kind::GClue ? apply_b_rule(mode, cl, cluster, ops)
                                                                      : cluster;
      const Subset eset = mode.kind == CompatibilityMode::Kind::GClue ? apply_e_rule(mode, cl, cluster, ops)
                                                                      : complement(cluster);
      for (auto x : cluster.members()) {
        for (auto y : bset.members()) {
          for (auto z : eset.members()) {
            ++v.instances_checked;
            ++fired;
            const Subset a = Subset::singleton(n, x);
            const Subset b = Subset::singleton(n, y);
            const Subset c = Subset::singleton(n, z);
            if (!d(a, b, c)) record({cluster, a, b, c});
          }
        }
      }
    }
  }

  if (worst) {
    v.status = Status::Fails;
    if (mode.kind == CompatibilityMode::Kind::OverlapCloser) {
      v.witnesses.push_back({{"A", "B", "C"}, {(*worst)[0], (*worst)[1], (*worst)[2]}});
    } else {
      v.witnesses.push_back({{"A", "a", "b", "c"}, {(*worst)[0], (*worst)[1], (*worst)[2], (*worst)[3]}});
    }
  } else {
    v.status = fired == 0 ? Status::Vacuous : Status::Holds;
  }
  return v;
}

PipelineReport run_pipeline(const PipelineConfig& config) {
  PipelineReport report;

  // Step 1: the structure without κ (and possibly without δ).
  MssComponents base = config.base;
  base.kappa.reset();
  base.delta.reset();
  MssStructure s = assemble(std::move(base));
  {
    PipelineStep step{1, "define the structure", "done", {}};
    std::string bound;
    for (Symbol x : s.signature()) bound += (bound.empty() ? "" : ", ") + to_string(x);
    step.notes.push_back("bound symbols: " + bound);
    step.notes.push_back("delta and kappa deferred to later steps");
    report.steps.push_back(std::move(step));
  }

  // Step 2: reduct.
  std::string dropped;
  if (config.reduct_keep) {
    const Signature before = s.signature();
    s = reduct(s, *config.reduct_keep);
    for (Symbol x : before) {
      if (!s.bound(x)) dropped += (dropped.empty() ? "" : ", ") + to_string(x);
    }
    PipelineStep step{2, "form a reduct", "done", {}};
    std::string kept;
    for (Symbol x : s.signature()) kept += (kept.empty() ? "" : ", ") + to_string(x);
    step.notes.push_back("kept symbols: " + kept);
    report.steps.push_back(std::move(step));
  } else {
    report.steps.push_back({2, "form a reduct", "skipped", {"no reduct requested; full signature kept"}});
  }

  // Step 3: the clustering is computed elsewhere and ingested here.
  if (!config.clustering) throw ConfigurationError("pipeline needs a clustering input");
  report.steps.push_back({3,
                          "compute clusters",
                          "external clustering ingested",
                          {std::to_string(config.clustering->size()) + " clusters"}});

  // Step 4: bind κ.
  s = s.with_kappa(*config.clustering);
  report.steps.push_back({4, "bind the clustering as kappa", "done", {}});

  // Step 5: verification and validation.
  PipelineStep step5{5, "investigate delta", "done", {}};
  report.base_verdicts = verify(s, {}, config.verify);
  report.base_classification = classify(s, report.base_verdicts);
  if (const OperatorSuite* ops = s.operators()) {
    report.validity = validate_clustering(*config.clustering, *ops, config.difference, config.verify.check);
    report.proposition = check_proposition_all(*ops, config.difference, config.verify.check);
  } else {
    step5.status = "partially deferred";
    step5.notes.push_back("deficits and validity grades deferred: l or u not bound");
  }
  if (config.delta_candidates.empty()) {
    step5.notes.push_back("no delta candidates; validation only");
  }
  std::vector<CompatibilityMode> modes = config.modes;
  if (modes.empty()) modes.push_back(CompatibilityMode::overlap_closer());
  const OperatorSuite* ops_for_modes = s.operators();
  for (const auto& d : config.delta_candidates) {
    CandidateReport cand;
    cand.delta = d.name();
    const MssStructure with_d = s.with_delta(d);
    cand.verdicts = verify(with_d, {}, config.verify);
    cand.classification = classify(with_d, cand.verdicts);
    for (const auto& m : modes) {
      cand.compatibility.push_back(check_compatibility(*config.clustering, d, m, ops_for_modes));
    }
    report.candidates.push_back(std::move(cand));
  }
  if (!dropped.empty()) {
    step5.status = "partially deferred";
    step5.notes.push_back("checks needing " + dropped + " deferred by the reduct");
  }
  report.steps.push_back(std::move(step5));
  report.structure = std::move(s);
  return report;
}

}  // namespace msslab
