#pragma once

// Quantifier engine: evaluates a predicate over all (or a seeded sample of)
// K-tuples of subsets and keeps the lexicographically least failing tuple.
// Work is split over `jobs` threads; the merge is order-independent, so the
// result does not depend on scheduling.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "msslab/universe.hpp"
#include "msslab/verdict.hpp"

namespace msslab::detail {

enum class Outcome { Pass, Vacuous, Fail };

template <std::size_t K>
struct ScanResult {
  std::uint64_t instances = 0;
  std::uint64_t fired = 0;  // instances that were not vacuous
  std::uint64_t failures = 0;
  std::optional<std::array<Subset, K>> witness;
  bool sampled = false;
};

template <std::size_t K>
bool tuple_less(const std::array<Subset, K>& a, const std::array<Subset, K>& b) {
  for (std::size_t i = 0; i < K; ++i) {
    if (lex_less(a[i], b[i])) return true;
    if (lex_less(b[i], a[i])) return false;
  }
  return false;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic random subset for instance `index`, variable `var`.
inline Subset sampled_subset(std::size_t n, std::uint64_t seed, std::uint64_t index,
                             std::size_t var) {
  const std::uint64_t h = splitmix64(splitmix64(seed ^ (index * 0x100000001b3ULL)) + var);
  return {n, h & full_mask(n)};
}

/// Whether a K-ary quantification over an n-element powerset is enumerated.
inline bool use_exhaustive(std::size_t n, std::size_t arity, const CheckOptions& opt) {
  if (n * arity > 62) return false;
  if (n <= opt.exhaustive_max_universe) return true;
  return (std::uint64_t{1} << (n * arity)) <= opt.sample_budget;
}

template <std::size_t K, class Fn>
ScanResult<K> scan_range(std::size_t n, bool exhaustive, const CheckOptions& opt,
                         std::uint64_t begin, std::uint64_t end, const Fn& fn) {
  ScanResult<K> r;
  r.sampled = !exhaustive;
  const std::uint64_t mask = full_mask(n);
  std::array<Subset, K> tuple;
  for (std::uint64_t i = begin; i < end; ++i) {
    for (std::size_t v = 0; v < K; ++v) {
      tuple[v] = exhaustive ? Subset(n, (i >> (v * n)) & mask) : sampled_subset(n, opt.seed, i, v);
    }
    ++r.instances;
    const Outcome o = fn(tuple);
    if (o == Outcome::Vacuous) continue;
    ++r.fired;
    if (o == Outcome::Fail) {
      ++r.failures;
      if (!r.witness || tuple_less(tuple, *r.witness)) r.witness = tuple;
    }
  }
  return r;
}

template <std::size_t K>
void merge_into(ScanResult<K>& acc, const ScanResult<K>& part) {
  acc.instances += part.instances;
  acc.fired += part.fired;
  acc.failures += part.failures;
  if (part.witness && (!acc.witness || tuple_less(*part.witness, *acc.witness))) {
    acc.witness = part.witness;
  }
}

/// Scans all K-tuples of subsets of an n-element universe. `fn` must be safe
/// to call concurrently.
template <std::size_t K, class Fn>
ScanResult<K> scan(std::size_t n, const CheckOptions& opt, const Fn& fn) {
  const bool exhaustive = use_exhaustive(n, K, opt);
  const std::uint64_t total = exhaustive ? (std::uint64_t{1} << (n * K)) : opt.sample_budget;
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(opt.jobs, total));
  ScanResult<K> acc;
  acc.sampled = !exhaustive;
  if (jobs == 1) {
    merge_into(acc, scan_range<K>(n, exhaustive, opt, 0, total, fn));
    return acc;
  }
  std::vector<ScanResult<K>> parts(jobs);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::uint64_t b = std::min<std::uint64_t>(total, j * chunk);
      const std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
      workers.emplace_back([&, j, b, e] { parts[j] = scan_range<K>(n, exhaustive, opt, b, e, fn); });
    }
  }
  for (const auto& p : parts) merge_into(acc, p);
  return acc;
}

/// Converts a scan into a verdict. Implications with no firing instance are
/// reported as vacuous.
template <std::size_t K>
Verdict to_verdict(std::string axiom, const ScanResult<K>& r,
                   const std::array<const char*, K>& vars, bool implication,
                   const CheckOptions& opt) {
  Verdict v;
  v.axiom = std::move(axiom);
  v.instances_checked = r.instances;
  v.sampled = r.sampled;
  if (r.sampled) v.seed = opt.seed;
  if (r.failures > 0) {
    v.status = Status::Fails;
    Witness w;
    for (std::size_t i = 0; i < K; ++i) {
      w.variables.emplace_back(vars[i]);
      w.values.push_back((*r.witness)[i]);
    }
    v.witnesses.push_back(std::move(w));
  } else if (r.fired == 0 && (implication || r.instances > 0)) {
    v.status = Status::Vacuous;
  } else {
    v.status = Status::Holds;
  }
  return v;
}

}  // namespace msslab::detail
