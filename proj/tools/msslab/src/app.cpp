#include "msslab/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "msslab/cli/config.hpp"
#include "msslab/cli/report.hpp"

namespace msslab::cli {

namespace {

struct Flags {
  std::string input;
  std::string output;
  std::string format = "json";
  bool strict_exit = false;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes next to the target and renames, so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

// Flag, then config, then MSSLAB_SEED, then 0.
std::uint64_t resolve_seed(const Flags& f, std::optional<std::uint64_t> from_config) {
  if (f.seed) return *f.seed;
  if (from_config) return *from_config;
  if (const char* env = std::getenv("MSSLAB_SEED")) {
    const std::string s(env);
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') {
      throw CLI::ValidationError("MSSLAB_SEED", "expected a non-negative integer, got '" + s + "'");
    }
    return v;
  }
  return 0;
}

void add_common(CLI::App& cmd, Flags& f, const char* what) {
  cmd.add_option("input", f.input, what)->required();
  cmd.add_option("-o,--output", f.output, "write the report to this file");
  cmd.add_option("--format", f.format, "report format")->check(CLI::IsMember({"json", "text"}));
  cmd.add_flag("--strict-exit", f.strict_exit, "exit 2 when any verdict fails");
  cmd.add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  cmd.add_option("--seed", f.seed, "seed for sampled checks");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model laboratory for minimal soft clustering systems", "msslab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Flags f;
  auto* check = app.add_subcommand("check-axioms", "verify the axiom battery and classify");
  auto* validate = app.add_subcommand("validate", "deficits, validity grades and compatibility of a clustering");
  auto* pipeline = app.add_subcommand("pipeline", "run the five-step validation methodology");
  auto* search = app.add_subcommand("search", "search small structures for an axiom pattern");
  add_common(*check, f, "config file (JSON)");
  add_common(*validate, f, "config file (JSON)");
  add_common(*pipeline, f, "config file (JSON)");
  add_common(*search, f, "search spec file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string text = read_file(f.input);
    Json report;
    RunOptions opt;
    opt.jobs = f.jobs;
    if (search->parsed()) {
      bool seed_given = false;
      SearchSpec spec = parse_search_spec(text, &seed_given);
      opt.seed = resolve_seed(f, seed_given ? std::optional<std::uint64_t>(spec.seed) : std::nullopt);
      report = search_report(spec, opt);
    } else {
      const Config cfg = parse_config(text);
      opt.seed = resolve_seed(f, cfg.seed);
      if (check->parsed()) {
        report = check_axioms_report(cfg, opt);
      } else if (validate->parsed()) {
        report = validate_report(cfg, opt);
      } else {
        report = pipeline_report(cfg, opt);
      }
    }
    const std::string rendered = f.format == "text" ? render_text(report) : render_json(report);
    if (f.output.empty()) {
      out << rendered;
    } else {
      write_atomically(f.output, rendered);
    }
    return f.strict_exit && has_failure(report) ? kExitFailure : kExitOk;
  } catch (const ParseError& e) {
    err << f.input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // StructuralError and ConfigurationError
    err << f.input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace msslab::cli
