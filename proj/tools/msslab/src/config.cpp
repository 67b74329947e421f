#include "msslab/cli/config.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace msslab::cli {

using nlohmann::json;

std::string to_string(DifferencePolicy p) {
  switch (p) {
    case DifferencePolicy::Contained: return "contained";
    case DifferencePolicy::Total: return "total";
    case DifferencePolicy::ProperContained: return "proper-contained";
  }
  return "?";
}

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path.empty() ? "/" : path, message);
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto pos = msg.find("syntax error");
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                     pos == std::string::npos ? msg : msg.substr(pos));
  }
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      fail(child(path, key), "unknown field");
    }
  }
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t unsigned_at(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::size_t element_at(const Universe& u, const json& j, const std::string& path) {
  const std::string name = string_at(j, path);
  auto idx = u.index_of(name);
  if (!idx) fail(path, "element '" + name + "' is not declared in the universe");
  return *idx;
}

Subset subset_at(const Universe& u, const json& j, const std::string& path) {
  array_at(j, path);
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < j.size(); ++i) bits |= std::uint64_t{1} << element_at(u, j[i], child(path, i));
  return {u.size(), bits};
}

Universe parse_universe(const json& j, const std::string& path) {
  array_at(j, path);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) names.push_back(string_at(j[i], child(path, i)));
  try {
    return Universe(std::move(names));
  } catch (const StructuralError& e) {
    fail(path, e.what());
  }
}

std::pair<std::size_t, std::size_t> pair_at(const Universe& u, const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a pair [x, y]");
  return {element_at(u, j[0], child(path, 0)), element_at(u, j[1], child(path, 1))};
}

BinaryRelation parse_relation(const Universe& u, const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown_keys(j, path, {"pairs", "generators", "closure"});
  if (j.contains("pairs") == j.contains("generators")) {
    fail(path, "give exactly one of 'pairs' or 'generators'");
  }
  const bool explicit_pairs = j.contains("pairs");
  const std::string key = explicit_pairs ? "pairs" : "generators";
  const json& list = array_at(j[key], child(path, key));
  BinaryRelation r(u.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto [x, y] = pair_at(u, list[i], child(child(path, key), i));
    r.insert(x, y);
  }
  if (!j.contains("closure")) return r;
  if (explicit_pairs) fail(child(path, "closure"), "closure applies to generators only");
  ClosureFlags flags;
  const json& cl = array_at(j["closure"], child(path, "closure"));
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const std::string p = child(child(path, "closure"), i);
    const std::string flag = string_at(cl[i], p);
    if (flag == "reflexive") {
      flags.reflexive = true;
    } else if (flag == "symmetric") {
      flags.symmetric = true;
    } else if (flag == "transitive") {
      flags.transitive = true;
    } else {
      fail(p, "unknown closure '" + flag + "'");
    }
  }
  return close_relation(r, flags);
}

std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> parse_binary_table(const Universe& u, const json& j,
                                                                            const std::string& path) {
  array_at(j, path);
  std::map<std::pair<std::uint64_t, std::uint64_t>, Subset> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = child(path, i);
    if (!j[i].is_array() || j[i].size() != 3) fail(p, "expected [a, b, result]");
    const Subset a = subset_at(u, j[i][0], child(p, 0));
    const Subset b = subset_at(u, j[i][1], child(p, 1));
    const Subset r = subset_at(u, j[i][2], child(p, 2));
    if (!out.emplace(std::make_pair(a.bits(), b.bits()), r).second) fail(p, "duplicate entry for this pair");
  }
  return out;
}

DeltaPredicate parse_delta(const Universe& u, const json& j, const std::string& path, const OperatorSuite* ops) {
  auto named = [&](DeltaPredicate d) {
    if (j.is_object() && j.contains("name")) d.rename(string_at(j["name"], child(path, "name")));
    return d;
  };
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    for (auto k : {DeltaKind::E0, DeltaKind::E1, DeltaKind::E2, DeltaKind::UE1}) {
      if (to_string(k) != name) continue;
      if ((k == DeltaKind::E2 || k == DeltaKind::UE1) && ops == nullptr) {
        fail(path, name + " needs approximations; configure a relation or granulation");
      }
      return DeltaPredicate::builtin(k, u.size(), ops);
    }
    fail(path, "unknown delta '" + name + "' (expected E0, E1, E2 or uE1)");
  }
  require_object(j, path);
  reject_unknown_keys(j, path, {"extensional", "def0", "name"});
  if (j.contains("extensional") == j.contains("def0")) fail(path, "give exactly one of 'extensional' or 'def0'");
  if (j.contains("extensional")) {
    if (u.size() > DeltaTable::kMaxUniverse) {
      fail(child(path, "extensional"), "extensional delta needs a universe of at most " +
                                           std::to_string(DeltaTable::kMaxUniverse) + " elements");
    }
    const std::string p = child(path, "extensional");
    const json& list = array_at(j["extensional"], p);
    DeltaTable table(u.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string q = child(p, i);
      if (!list[i].is_array() || list[i].size() != 3) fail(q, "expected a triple [a, b, c]");
      table.insert(subset_at(u, list[i][0], child(q, 0)), subset_at(u, list[i][1], child(q, 1)),
                   subset_at(u, list[i][2], child(q, 2)));
    }
    return named(DeltaPredicate::extensional(std::move(table)));
  }
  const std::string p = child(path, "def0");
  const json& spec = j["def0"];
  require_object(spec, p);
  reject_unknown_keys(spec, p, {"f"});
  if (!spec.contains("f")) fail(p, "missing 'f'");
  const json& f = spec["f"];
  if (f.is_string()) {
    const std::string name = f.get<std::string>();
    if (name == "union") return named(DeltaPredicate::def0(NearnessMap::union_map(u.size())));
    if (name == "intersection") return named(DeltaPredicate::def0(NearnessMap::intersection_map(u.size())));
    if (name == "upper-union") {
      if (ops == nullptr) fail(child(p, "f"), "upper-union needs approximations");
      return named(DeltaPredicate::def0(NearnessMap::upper_union_map(*ops)));
    }
    fail(child(p, "f"), "unknown map '" + name + "'");
  }
  try {
    return named(DeltaPredicate::def0(NearnessMap::table(u.size(), parse_binary_table(u, f, child(p, "f")))));
  } catch (const ConfigurationError& e) {
    fail(child(p, "f"), e.what());
  }
}

}  // namespace

MssComponents Config::components() const {
  MssComponents c = MssComponents::standard(universe);
  if (auto ops = operators()) c.operators = std::move(*ops);
  if (granulation) c.granulation = *granulation;
  if (sum) c.sum = *sum;
  return c;
}

std::optional<OperatorSuite> Config::operators() const {
  if (!granulation) return std::nullopt;
  OperatorSuite ops = OperatorSuite::granular(*granulation);
  if (bited_upper && *bited_upper == "l") {
    ops = ops.with_bited_upper([g = *granulation](const Subset& a) { return g.lower(a); });
  }
  return ops;
}

Config parse_config(const std::string& text) {
  const json doc = parse_document(text);
  require_object(doc, "");
  reject_unknown_keys(doc, "",
                      {"universe", "relation", "granulation", "delta", "sum", "clustering", "compatibility_modes",
                       "reduct", "seed", "difference_policy", "bited_upper", "trans1_reading"});
  if (!doc.contains("universe")) fail("/universe", "missing required field");
  Config c(parse_universe(doc["universe"], "/universe"));
  const Universe& u = c.universe;

  if (doc.contains("relation")) c.relation = parse_relation(u, doc["relation"], "/relation");

  if (doc.contains("granulation")) {
    const json& g = doc["granulation"];
    if (g.is_string()) {
      if (g.get<std::string>() != "predecessor") fail("/granulation", "expected \"predecessor\" or a granule list");
      if (!c.relation) fail("/granulation", "\"predecessor\" needs a relation");
      c.granulation = predecessor_granulation(*c.relation);
      c.granulation_source = "predecessor";
    } else {
      if (c.relation) fail("/granulation", "two granulation sources: a relation and an explicit granule list");
      array_at(g, "/granulation");
      std::vector<Subset> granules;
      for (std::size_t i = 0; i < g.size(); ++i) granules.push_back(subset_at(u, g[i], child("/granulation", i)));
      c.granulation = Granulation(u.size(), std::move(granules));
      c.granulation_source = "explicit";
    }
  } else if (c.relation) {
    c.granulation = predecessor_granulation(*c.relation);
    c.granulation_source = "predecessor";
  }

  if (doc.contains("bited_upper")) {
    const std::string b = string_at(doc["bited_upper"], "/bited_upper");
    if (b != "u" && b != "l") fail("/bited_upper", "expected \"u\" or \"l\"");
    if (!c.granulation) fail("/bited_upper", "needs approximations");
    if (b == "l") c.bited_upper = b;
  }

  const std::optional<OperatorSuite> ops = c.operators();
  if (doc.contains("delta")) {
    const json& d = doc["delta"];
    if (d.is_array()) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        c.deltas.push_back(parse_delta(u, d[i], child("/delta", i), ops ? &*ops : nullptr));
      }
    } else {
      c.deltas.push_back(parse_delta(u, d, "/delta", ops ? &*ops : nullptr));
    }
    for (std::size_t i = 0; i < c.deltas.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        if (c.deltas[k].name() == c.deltas[i].name()) {
          fail(child("/delta", i), "duplicate delta name '" + c.deltas[i].name() + "'");
        }
      }
    }
  }

  if (doc.contains("sum")) {
    const json& s = doc["sum"];
    if (s.is_string()) {
      const std::string mode = s.get<std::string>();
      if (mode == "total-union") {
        c.sum = SumOperation::total_union(u.size());
      } else if (mode == "granular-sum") {
        if (!c.granulation) fail("/sum", "granular-sum needs a granulation");
        c.sum = SumOperation::granular_sum(*c.granulation);
      } else {
        fail("/sum", "unknown sum mode '" + mode + "'");
      }
    } else {
      require_object(s, "/sum");
      reject_unknown_keys(s, "/sum", {"extensional"});
      if (!s.contains("extensional")) fail("/sum", "expected a mode name or {\"extensional\": [...]}");
      c.sum = SumOperation::extensional(u.size(), parse_binary_table(u, s["extensional"], "/sum/extensional"));
    }
  }

  if (doc.contains("clustering")) {
    const json& cl = array_at(doc["clustering"], "/clustering");
    std::vector<Subset> clusters;
    for (std::size_t i = 0; i < cl.size(); ++i) clusters.push_back(subset_at(u, cl[i], child("/clustering", i)));
    try {
      c.clustering = Clustering(u.size(), std::move(clusters));
    } catch (const StructuralError& e) {
      fail("/clustering", e.what());
    }
  }

  if (doc.contains("compatibility_modes")) {
    const json& m = array_at(doc["compatibility_modes"], "/compatibility_modes");
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string p = child("/compatibility_modes", i);
      try {
        c.modes.push_back(CompatibilityMode::parse(string_at(m[i], p)));
      } catch (const ConfigurationError& e) {
        fail(p, e.what());
      }
    }
  }

  if (doc.contains("reduct")) {
    const json& r = array_at(doc["reduct"], "/reduct");
    Signature keep;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::string p = child("/reduct", i);
      auto sym = symbol_from_string(string_at(r[i], p));
      if (!sym) fail(p, "unknown signature symbol");
      if (*sym != Symbol::Carrier) keep.insert(*sym);
    }
    c.reduct = keep;
  }

  if (doc.contains("seed")) c.seed = unsigned_at(doc["seed"], "/seed");

  if (doc.contains("difference_policy")) {
    const std::string p = string_at(doc["difference_policy"], "/difference_policy");
    bool found = false;
    for (auto pol : {DifferencePolicy::Contained, DifferencePolicy::Total, DifferencePolicy::ProperContained}) {
      if (to_string(pol) == p) {
        c.difference = pol;
        found = true;
      }
    }
    if (!found) fail("/difference_policy", "expected contained, total or proper-contained");
  }

  if (doc.contains("trans1_reading")) {
    const std::string r = string_at(doc["trans1_reading"], "/trans1_reading");
    if (r == "literal") {
      c.trans1 = Trans1Reading::Literal;
    } else if (r == "positive") {
      c.trans1 = Trans1Reading::Positive;
    } else {
      fail("/trans1_reading", "expected literal or positive");
    }
  }
  return c;
}

SearchSpec parse_search_spec(const std::string& text, bool* seed_given) {
  const json doc = parse_document(text);
  require_object(doc, "");
  reject_unknown_keys(doc, "",
                      {"n", "family", "delta", "required", "forbidden", "budget", "seed", "density", "exhaustive"});
  SearchSpec s;
  if (doc.contains("n")) {
    s.n = unsigned_at(doc["n"], "/n");
    if (s.n == 0 || s.n > kMaxUniverseSize) fail("/n", "universe size out of range");
  }
  if (doc.contains("family")) {
    auto f = structure_family_from_string(string_at(doc["family"], "/family"));
    if (!f) fail("/family", "expected relations, granulations or extensional-deltas");
    s.family = *f;
  }
  if (doc.contains("delta")) {
    const std::string d = string_at(doc["delta"], "/delta");
    bool found = false;
    for (auto k : {DeltaKind::E0, DeltaKind::E1, DeltaKind::E2, DeltaKind::UE1}) {
      if (to_string(k) == d) {
        s.delta = k;
        found = true;
      }
    }
    if (!found) fail("/delta", "expected E0, E1, E2 or uE1");
  }
  for (const char* key : {"required", "forbidden"}) {
    if (!doc.contains(key)) continue;
    const std::string p = std::string("/") + key;
    const json& list = doc[key];
    std::vector<std::string> ids;
    if (list.is_string()) {
      ids.push_back(list.get<std::string>());
    } else {
      array_at(list, p);
      for (std::size_t i = 0; i < list.size(); ++i) ids.push_back(string_at(list[i], child(p, i)));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (find_axiom(ids[i]) == nullptr) fail(list.is_string() ? p : child(p, i), "unknown axiom '" + ids[i] + "'");
    }
    (std::string(key) == "required" ? s.required : s.forbidden) = std::move(ids);
  }
  if (doc.contains("budget")) {
    s.budget = unsigned_at(doc["budget"], "/budget");
    if (s.budget == 0) fail("/budget", "must be positive");
  }
  if (doc.contains("seed")) s.seed = unsigned_at(doc["seed"], "/seed");
  if (seed_given != nullptr) *seed_given = doc.contains("seed");
  if (doc.contains("density")) {
    if (!doc["density"].is_number()) fail("/density", "expected a number");
    s.density = doc["density"].get<double>();
    if (s.density < 0.0 || s.density > 1.0) fail("/density", "must lie in [0, 1]");
  }
  if (doc.contains("exhaustive")) {
    if (!doc["exhaustive"].is_boolean()) fail("/exhaustive", "expected true or false");
    s.exhaustive = doc["exhaustive"].get<bool>();
  }
  return s;
}

}  // namespace msslab::cli
