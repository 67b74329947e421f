#include "msslab/cli/report.hpp"

#include <sstream>

#include "msslab/replay.hpp"
#include "msslab/validation.hpp"

namespace msslab::cli {

namespace {

Json subset_json(const Universe& u, const Subset& s) { return u.names_of(s); }

Json partial_json(const Universe& u, const PartialResult& s) { return s ? subset_json(u, *s) : Json(nullptr); }

Json witness_json(const Universe& u, const Witness& w) {
  Json values = Json::array();
  for (const auto& v : w.values) values.push_back(subset_json(u, v));
  return {{"variables", w.variables}, {"values", std::move(values)}};
}

Json verdict_json(const Universe& u, const Verdict& v) {
  Json j = {{"axiom", v.axiom}, {"status", to_string(v.status)}, {"instances_checked", v.instances_checked}};
  j["mode"] = v.sampled ? "sampled" : "exhaustive";
  if (v.sampled && v.seed) j["seed"] = *v.seed;
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_json(u, w));
  j["witnesses"] = std::move(ws);
  if (!v.evidence.empty()) {
    Json ev = Json::array();
    for (const auto& w : v.evidence) ev.push_back(witness_json(u, w));
    j["evidence"] = std::move(ev);
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json verdicts_json(const Universe& u, const std::vector<Verdict>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(verdict_json(u, v));
  return out;
}

Json classification_json(const Classification& c) {
  return {{"is_mss", to_string(c.is_mss)},
          {"is_strict", to_string(c.is_strict)},
          {"is_rough", to_string(c.is_rough)},
          {"is_gmss", to_string(c.is_gmss)}};
}

Json signature_json(const Signature& s) {
  Json out = Json::array();
  for (Symbol x : s) out.push_back(to_string(x));
  return out;
}

Json structure_json(const Config& cfg) {
  const Universe& u = cfg.universe;
  Json j;
  j["universe"] = u.names();
  if (cfg.relation) {
    Json pairs = Json::array();
    for (auto [x, y] : cfg.relation->pairs()) pairs.push_back({u.name(x), u.name(y)});
    j["relation"] = std::move(pairs);
  } else {
    j["relation"] = nullptr;
  }
  Json g = {{"source", cfg.granulation_source}};
  if (cfg.granulation) {
    Json gs = Json::array();
    for (const auto& x : cfg.granulation->granules()) gs.push_back(subset_json(u, x));
    g["granules"] = std::move(gs);
    g["diagnostics"] = cfg.granulation->diagnostics();
  }
  j["granulation"] = std::move(g);
  j["bited_upper"] = cfg.granulation ? Json(cfg.bited_upper.value_or("u")) : Json(nullptr);
  j["sum"] = cfg.sum ? Json(cfg.sum->name()) : Json(nullptr);
  Json ds = Json::array();
  for (const auto& d : cfg.deltas) ds.push_back(d.name());
  j["deltas"] = std::move(ds);
  if (cfg.clustering) {
    Json cl = Json::array();
    for (const auto& c : cfg.clustering->clusters()) cl.push_back(subset_json(u, c));
    j["clustering"] = std::move(cl);
  } else {
    j["clustering"] = nullptr;
  }
  j["reduct"] = cfg.reduct ? signature_json(*cfg.reduct) : Json(nullptr);
  j["difference_policy"] = to_string(cfg.difference);
  j["trans1_reading"] = cfg.trans1 == Trans1Reading::Literal ? "literal" : "positive";
  return j;
}

Json provenance_json(const RunOptions& opt) {
  return {{"tool", "msslab"}, {"version", kToolVersion}, {"seed", opt.seed}};
}

VerifyOptions verify_options(const Config& cfg, const RunOptions& opt) {
  VerifyOptions v;
  v.check.jobs = opt.jobs;
  v.check.seed = opt.seed;
  v.trans1 = cfg.trans1;
  return v;
}

CheckOptions check_options(const RunOptions& opt) {
  CheckOptions c;
  c.jobs = opt.jobs;
  c.seed = opt.seed;
  return c;
}

// The structures a config describes: one per δ candidate, or a single one
// with δ unbound. κ is bound when a clustering is configured.
std::vector<MssStructure> config_structures(const Config& cfg) {
  std::vector<MssStructure> out;
  auto finish = [&](MssComponents c) {
    if (cfg.clustering) c.kappa = *cfg.clustering;
    MssStructure s = assemble(std::move(c));
    if (cfg.reduct) s = reduct(s, *cfg.reduct);
    out.push_back(std::move(s));
  };
  if (cfg.deltas.empty()) {
    finish(cfg.components());
  } else {
    for (const auto& d : cfg.deltas) {
      MssComponents c = cfg.components();
      c.delta = d;
      finish(std::move(c));
    }
  }
  return out;
}

std::vector<CompatibilityMode> modes_of(const Config& cfg) {
  return cfg.modes.empty() ? std::vector<CompatibilityMode>{CompatibilityMode::overlap_closer()} : cfg.modes;
}

Json grades_json(const Universe& u, const ClusterGrades& g) {
  return {{"cluster", subset_json(u, g.cluster)},
          {"lower_deficit", partial_json(u, g.lower_deficit)},
          {"upper_deficit", partial_json(u, g.upper_deficit)},
          {"lu_valid", g.lu_valid},
          {"l_pre_valid", g.l_pre_valid},
          {"l_pre_valid_closed_form", g.l_pre_valid_closed_form},
          {"u_pre_valid", g.u_pre_valid},
          {"l_traceable", g.l_traceable},
          {"u_traceable", g.u_traceable},
          {"l_pre_witness", partial_json(u, g.l_pre_witness)},
          {"u_pre_witness", partial_json(u, g.u_pre_witness)},
          {"mode", g.sampled ? "sampled" : "exhaustive"}};
}

Json validity_json(const Universe& u, const ValidityReport& r) {
  Json clusters = Json::array();
  for (const auto& g : r.clusters) clusters.push_back(grades_json(u, g));
  return {{"clusters", std::move(clusters)},
          {"reading", "lu_valid means C^l = C^u = C; a lower-case c in the grade is read as C"},
          {"lu_valid", r.lu_valid},
          {"l_pre_valid", r.l_pre_valid},
          {"u_pre_valid", r.u_pre_valid},
          {"l_traceable", r.l_traceable},
          {"u_traceable", r.u_traceable}};
}

bool any_fails(const Json& j) {
  if (j.is_object()) {
    auto it = j.find("status");
    if (it != j.end() && it->is_string() && *it == "fails") return true;
    for (const auto& [k, v] : j.items()) {
      (void)k;
      if (any_fails(v)) return true;
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (any_fails(v)) return true;
    }
  }
  return false;
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto inline_list = [](const Json& v) {
    // Arrays of scalars (subsets, name lists) print on one line.
    if (!v.is_array()) return false;
    for (const auto& x : v) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return scalar(v);
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar(v[i]);
    return s + "}";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !inline_list(v)) {
        out << pad << k << ":\n";
        render(v, indent + 1, out);
      } else {
        out << pad << k << ": " << flat(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) out << pad << "(none)\n";
    for (const auto& v : j) {
      if (v.is_structured() && !inline_list(v)) {
        out << pad << "-\n";
        render(v, indent + 1, out);
      } else {
        out << pad << "- " << flat(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

Witness parse_witness(const Universe& u, const Json& w) {
  Witness out;
  for (const auto& v : w.at("variables")) out.variables.push_back(v.get<std::string>());
  for (const auto& v : w.at("values")) out.values.push_back(u.subset(v.get<std::vector<std::string>>()));
  return out;
}

void replay_verdicts(const MssStructure& s, const Json& verdicts, const Config& cfg, const std::string& where,
                     std::vector<std::string>& problems) {
  for (const auto& v : verdicts) {
    if (v.at("status") != "fails") continue;
    const std::string axiom = v.at("axiom").get<std::string>();
    if (v.at("witnesses").empty()) problems.push_back(where + ": " + axiom + " fails without a witness");
    for (const auto& w : v.at("witnesses")) {
      auto ok = replay_witness(s, axiom, parse_witness(cfg.universe, w), cfg.trans1);
      if (!ok) {
        problems.push_back(where + ": " + axiom + " witness cannot be replayed");
      } else if (!*ok) {
        problems.push_back(where + ": " + axiom + " witness is not a violation");
      }
    }
  }
}

}  // namespace

Json check_axioms_report(const Config& cfg, const RunOptions& opt) {
  const Universe& u = cfg.universe;
  Json report;
  report["command"] = "check-axioms";
  report["provenance"] = provenance_json(opt);
  report["structure"] = structure_json(cfg);
  Json entries = Json::array();
  const auto structures = config_structures(cfg);
  for (const auto& s : structures) {
    Json e;
    e["delta"] = s.delta() != nullptr ? Json(s.delta()->name()) : Json(nullptr);
    e["signature"] = signature_json(s.signature());
    const auto verdicts = verify(s, {}, verify_options(cfg, opt));
    e["verdicts"] = verdicts_json(u, verdicts);
    e["classification"] = classification_json(classify(s, verdicts));
    Json adm;
    for (const auto& v : verdicts) {
      if (v.axiom.rfind("adm-", 0) == 0) adm[v.axiom] = to_string(v.status);
    }
    e["admissibility"] = std::move(adm);
    if (s.delta() == nullptr) e["coherence"] = "deferred: delta not bound";
    entries.push_back(std::move(e));
  }
  report["structures"] = std::move(entries);
  return report;
}

Json validate_report(const Config& cfg, const RunOptions& opt) {
  if (!cfg.clustering) throw ParseError("/clustering", "validate needs a clustering");
  const Universe& u = cfg.universe;
  Json report;
  report["command"] = "validate";
  report["provenance"] = provenance_json(opt);
  report["structure"] = structure_json(cfg);
  const auto ops = cfg.operators();
  const CheckOptions copt = check_options(opt);
  if (ops) {
    report["validity"] = validity_json(u, validate_clustering(*cfg.clustering, *ops, cfg.difference, copt));
    Json per_cluster = Json::array();
    for (const auto& c : cfg.clustering->clusters()) {
      per_cluster.push_back(verdict_json(u, check_proposition(c, *ops, cfg.difference)));
    }
    report["proposition"] = {{"clusters", std::move(per_cluster)},
                             {"all_subsets", verdict_json(u, check_proposition_all(*ops, cfg.difference, copt))}};
  } else {
    report["validity"] = "deferred: l and u not bound";
    report["proposition"] = "deferred: l and u not bound";
  }
  Json compat = Json::array();
  for (const auto& d : cfg.deltas) {
    for (const auto& mode : modes_of(cfg)) {
      compat.push_back(verdict_json(u, check_compatibility(*cfg.clustering, d, mode, ops ? &*ops : nullptr)));
    }
  }
  report["compatibility"] = std::move(compat);
  return report;
}

Json pipeline_report(const Config& cfg, const RunOptions& opt) {
  const Universe& u = cfg.universe;
  PipelineConfig pc(cfg.components());
  pc.reduct_keep = cfg.reduct;
  pc.clustering = cfg.clustering;
  pc.delta_candidates = cfg.deltas;
  pc.modes = cfg.modes;
  pc.difference = cfg.difference;
  pc.verify = verify_options(cfg, opt);
  if (!cfg.clustering) throw ParseError("/clustering", "pipeline needs a clustering");
  const PipelineReport r = run_pipeline(pc);

  Json report;
  report["command"] = "pipeline";
  report["provenance"] = provenance_json(opt);
  report["structure"] = structure_json(cfg);
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"step", s.number}, {"title", s.title}, {"status", s.status}, {"notes", s.notes}});
  }
  report["steps"] = std::move(steps);
  report["base"] = {{"verdicts", verdicts_json(u, r.base_verdicts)},
                    {"classification", classification_json(r.base_classification)}};
  report["validity"] = r.validity ? validity_json(u, *r.validity) : Json("deferred: l and u not bound");
  report["proposition"] = r.proposition ? verdict_json(u, *r.proposition) : Json("deferred: l and u not bound");
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"delta", c.delta},
                     {"verdicts", verdicts_json(u, c.verdicts)},
                     {"classification", classification_json(c.classification)},
                     {"compatibility", verdicts_json(u, c.compatibility)}});
  }
  report["candidates"] = std::move(cands);
  return report;
}

Json search_report(const SearchSpec& spec, const RunOptions& opt) {
  SearchSpec s = spec;
  s.seed = opt.seed;
  VerifyOptions vo;
  vo.check.jobs = opt.jobs;
  vo.check.seed = opt.seed;
  const SearchResult result = find_witness(s, vo);

  Json report;
  report["command"] = "search";
  report["provenance"] = provenance_json(opt);
  report["spec"] = {{"n", s.n},
                    {"family", to_string(s.family)},
                    {"delta", to_string(s.delta)},
                    {"required", s.required},
                    {"forbidden", s.forbidden},
                    {"budget", s.budget},
                    {"density", s.density},
                    {"exhaustive", s.exhaustive}};
  report["examined"] = result.examined;
  report["mode"] = result.exhaustive ? "exhaustive" : "sampled";
  if (!result.witness) {
    report["result"] = "none within budget";
    report["witness"] = nullptr;
    return report;
  }
  report["result"] = "witness found";
  const GeneratedStructure& g = *result.witness;
  const Universe& u = g.structure.universe();
  Json w;
  w["index"] = g.index;
  if (g.relation) {
    Json pairs = Json::array();
    for (auto [x, y] : g.relation->pairs()) pairs.push_back({u.name(x), u.name(y)});
    w["relation"] = std::move(pairs);
  }
  if (const Granulation* gr = g.structure.granulation()) {
    Json gs = Json::array();
    for (const auto& x : gr->granules()) gs.push_back(subset_json(u, x));
    w["granules"] = std::move(gs);
  }
  if (const DeltaPredicate* d = g.structure.delta()) {
    w["delta"] = d->name();
    if (const DeltaTable* t = d->table()) {
      Json triples = Json::array();
      for (const auto& tr : t->triples()) {
        triples.push_back({subset_json(u, tr[0]), subset_json(u, tr[1]), subset_json(u, tr[2])});
      }
      w["delta_table"] = std::move(triples);
    }
  }
  std::vector<std::string> ids = s.required;
  ids.insert(ids.end(), s.forbidden.begin(), s.forbidden.end());
  w["verdicts"] = verdicts_json(u, verify(g.structure, ids, vo));
  report["witness"] = std::move(w);
  return report;
}

bool has_failure(const Json& report) { return any_fails(report); }

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

std::vector<std::string> replay_report(const Json& report, const Config& cfg) {
  std::vector<std::string> problems;
  const auto structures = config_structures(cfg);
  auto by_delta = [&](const Json& name) -> const MssStructure* {
    for (const auto& s : structures) {
      if (name.is_null() && s.delta() == nullptr) return &s;
      if (!name.is_null() && s.delta() != nullptr && s.delta()->name() == name.get<std::string>()) return &s;
    }
    return nullptr;
  };
  const std::string command = report.at("command").get<std::string>();
  if (command == "check-axioms") {
    for (const auto& e : report.at("structures")) {
      const MssStructure* s = by_delta(e.at("delta"));
      if (s == nullptr) {
        problems.push_back("no structure for delta " + e.at("delta").dump());
        continue;
      }
      replay_verdicts(*s, e.at("verdicts"), cfg, "delta " + e.at("delta").dump(), problems);
    }
  } else if (command == "validate") {
    for (const auto& v : report.at("compatibility")) {
      const std::string axiom = v.at("axiom").get<std::string>();
      const MssStructure* s = by_delta(Json(axiom.substr(axiom.rfind(':') + 1)));
      if (s == nullptr) {
        problems.push_back("no structure for " + axiom);
        continue;
      }
      replay_verdicts(*s, Json::array({v}), cfg, "compatibility", problems);
    }
  } else {
    problems.push_back("replay covers check-axioms and validate reports only");
  }
  return problems;
}

}  // namespace msslab::cli
