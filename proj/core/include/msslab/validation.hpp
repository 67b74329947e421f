#pragma once

// Rough validation of clusterings: deficits, validity grades, traceability,
// compatibility with a nearness predicate, and the five-step methodology
// pipeline that ties them together.

#include <optional>
#include <string>
#include <vector>

#include "msslab/clustering.hpp"
#include "msslab/delta.hpp"
#include "msslab/granulation.hpp"
#include "msslab/mss.hpp"
#include "msslab/universe.hpp"
#include "msslab/verdict.hpp"

namespace msslab {

/// (C \ l(C))^u, undefined when the difference is.
PartialResult lower_deficit(const Subset& c, const OperatorSuite& ops,
                            DifferencePolicy policy = DifferencePolicy::Contained);
/// (u(C) \ C)^u, undefined when the difference is.
PartialResult upper_deficit(const Subset& c, const OperatorSuite& ops,
                            DifferencePolicy policy = DifferencePolicy::Contained);

struct ClusterGrades {
  Subset cluster;
  PartialResult lower_deficit;
  PartialResult upper_deficit;
  bool lu_valid = false;
  bool l_pre_valid = false;
  /// l(C) = C; equals l_pre_valid whenever l is idempotent.
  bool l_pre_valid_closed_form = false;
  bool u_pre_valid = false;
  bool l_traceable = false;
  bool u_traceable = false;
  /// Lex-least V with l(V) = C (resp. u(V) = C), when found.
  std::optional<Subset> l_pre_witness;
  std::optional<Subset> u_pre_witness;
  /// Whether the preimage searches were sampled rather than exhaustive.
  bool sampled = false;
};

/// Exhaustive preimage searches are refused above this universe size.
inline constexpr std::size_t kMaxPreimageSearchUniverse = 20;

ClusterGrades validity_grades(const Subset& c, const OperatorSuite& ops,
                              DifferencePolicy policy = DifferencePolicy::Contained,
                              const CheckOptions& opt = {});

struct ValidityReport {
  std::vector<ClusterGrades> clusters;
  // Clustering-level grades: each holds iff it holds for every cluster.
  bool lu_valid = false;
  bool l_pre_valid = false;
  bool u_pre_valid = false;
  bool l_traceable = false;
  bool u_traceable = false;
};

ValidityReport validate_clustering(const Clustering& cl, const OperatorSuite& ops,
                                   DifferencePolicy policy = DifferencePolicy::Contained,
                                   const CheckOptions& opt = {});

/// "Deficit defined implies traceable" for one cluster, for l and u.
Verdict check_proposition(const Subset& c, const OperatorSuite& ops,
                          DifferencePolicy policy = DifferencePolicy::Contained);
/// The same implication for every subset of the universe.
Verdict check_proposition_all(const OperatorSuite& ops,
                              DifferencePolicy policy = DifferencePolicy::Contained,
                              const CheckOptions& opt = {});

/// How B is computed from a cluster A in the generalized form.
enum class BRule { Self, Lower, Upper, OverlapUnion };
/// How E is computed from a cluster A in the generalized form.
enum class ERule { Complement, OutsideUpper, DisjointUnion };

/// Quantification scheme used to judge a clustering against δ.
///
///   OverlapCloser: for pairwise-distinct clusters A, B, C with A∩B ≠ ∅ and
///     A∩C = ∅, δABC.
///   ClueSingleton: for every cluster A, a, b ∈ A and c ∉ A, δ{a}{b}{c}.
///   GClue: for every cluster A, a ∈ A, b ∈ B(A), c ∈ E(A), δ{a}{b}{c}.
struct CompatibilityMode {
  enum class Kind { OverlapCloser, ClueSingleton, GClue };

  Kind kind = Kind::OverlapCloser;
  BRule b_rule = BRule::Self;
  ERule e_rule = ERule::Complement;

  static CompatibilityMode overlap_closer() { return {}; }
  static CompatibilityMode clue_singleton() { return {Kind::ClueSingleton, BRule::Self, ERule::Complement}; }
  static CompatibilityMode gclue(BRule b, ERule e) { return {Kind::GClue, b, e}; }

  std::string name() const;
  /// Parses "overlap-closer", "clue-singleton" or "gclue(B,E)" with
  /// B in {self, lower, upper, overlap-union} and E in {complement,
  /// outside-upper, disjoint-union}. Throws ConfigurationError otherwise.
  static CompatibilityMode parse(const std::string& text);
};

/// Judges a clustering against δ. The witness is the lex-least violating
/// tuple, so the verdict does not depend on the order of the cluster list.
/// `ops` is needed only by gclue rules that use approximations.
Verdict check_compatibility(const Clustering& cl, const DeltaPredicate& d, const CompatibilityMode& mode,
                            const OperatorSuite* ops = nullptr);

struct PipelineConfig {
  explicit PipelineConfig(MssComponents b) : base(std::move(b)) {}

  MssComponents base;  ///< Step 1; δ and κ may be left out
  std::optional<Signature> reduct_keep;
  std::optional<Clustering> clustering;
  std::vector<DeltaPredicate> delta_candidates;
  std::vector<CompatibilityMode> modes;  ///< overlap-closer when empty
  DifferencePolicy difference = DifferencePolicy::Contained;
  VerifyOptions verify;
};

struct PipelineStep {
  int number = 0;
  std::string title;
  std::string status;
  std::vector<std::string> notes;
};

struct CandidateReport {
  std::string delta;
  std::vector<Verdict> verdicts;
  Classification classification;
  std::vector<Verdict> compatibility;
};

struct PipelineReport {
  std::vector<PipelineStep> steps;
  std::optional<MssStructure> structure;  ///< after Step 4
  std::vector<Verdict> base_verdicts;
  Classification base_classification;
  std::optional<ValidityReport> validity;  ///< empty when l or u is deferred
  std::optional<Verdict> proposition;
  std::vector<CandidateReport> candidates;
};

/// Runs the five steps: assemble, reduct, ingest the clustering, bind κ, then
/// verify and validate for every δ candidate. Throws ConfigurationError when
/// no clustering is supplied.
PipelineReport run_pipeline(const PipelineConfig& config);

}  // namespace msslab
