#pragma once

// Report documents for each command, and their text projection.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "msslab/cli/config.hpp"
#include "msslab/search.hpp"

namespace msslab::cli {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

Json check_axioms_report(const Config& cfg, const RunOptions& opt);
/// Throws ParseError when the config has no clustering.
Json validate_report(const Config& cfg, const RunOptions& opt);
Json pipeline_report(const Config& cfg, const RunOptions& opt);
Json search_report(const SearchSpec& spec, const RunOptions& opt);

/// Whether any verdict in the report has status "fails".
bool has_failure(const Json& report);

/// Pretty JSON with sorted keys and a trailing newline.
std::string render_json(const Json& report);
/// Indented key/value projection of the same document.
std::string render_text(const Json& report);

/// Re-checks every failing verdict's witnesses in a check-axioms or validate
/// report against the structures built from `cfg`. Returns one message per
/// witness that does not replay as a violation; empty means all replayed.
std::vector<std::string> replay_report(const Json& report, const Config& cfg);

}  // namespace msslab::cli
