#pragma once

// JSON config and search-spec ingestion for the command-line tool.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msslab/delta.hpp"
#include "msslab/granulation.hpp"
#include "msslab/mss.hpp"
#include "msslab/search.hpp"
#include "msslab/validation.hpp"

namespace msslab::cli {

/// A config or spec that could not be ingested. `where` is either
/// "line L, column C" for syntax errors or a JSON pointer to the bad field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct Config {
  explicit Config(Universe u) : universe(std::move(u)) {}

  Universe universe;
  std::optional<BinaryRelation> relation;
  std::optional<Granulation> granulation;
  std::string granulation_source = "none";  // "none", "predecessor" or "explicit"
  std::optional<std::string> bited_upper;    // plugin name; unset means u_b = u
  std::vector<DeltaPredicate> deltas;
  std::optional<SumOperation> sum;
  std::optional<Clustering> clustering;
  std::vector<CompatibilityMode> modes;
  std::optional<Signature> reduct;
  std::optional<std::uint64_t> seed;
  DifferencePolicy difference = DifferencePolicy::Contained;
  Trans1Reading trans1 = Trans1Reading::Literal;

  /// Standard components with l, u, γ and ⊕ bound as configured; δ and κ
  /// are left to the caller.
  MssComponents components() const;
  /// The operator suite, if a granulation was configured.
  std::optional<OperatorSuite> operators() const;
};

/// Parses a config document. Throws ParseError.
Config parse_config(const std::string& text);
/// Parses a search spec document. Throws ParseError. `seed_given` reports
/// whether the document set a seed.
SearchSpec parse_search_spec(const std::string& text, bool* seed_given = nullptr);

std::string to_string(DifferencePolicy p);

}  // namespace msslab::cli
