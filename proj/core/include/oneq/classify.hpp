#pragma once

// One-query decisions for single functions and exhaustive scans over small
// arities, plus the degree filter (a one-query function agrees with a
// multilinear polynomial of degree <= 2 on its domain).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oneq/boolfn.hpp"
#include "oneq/feasibility.hpp"

namespace oneq {

enum class Decision { one_query, not_one_query };

std::string to_string(Decision d);

/// Smallest d <= cap such that a real multilinear polynomial of degree <= d
/// agrees with f on the whole domain, or nullopt if none does.
std::optional<int> min_degree(const PartialBooleanFunction& f, int cap);

struct ClassifyOptions {
  /// Compute the canonical form (skipped above CanonicalOptions::max_arity).
  bool canonicalize = true;
  /// Run the solver even when the degree filter already rejects, so a
  /// contradiction trace is available.
  bool explain = true;
  /// When the degree exceeds 2, keep searching up to this cap for the exact
  /// degree (clamped to n).
  int full_degree_cap = 16;
};

struct Classification {
  Decision decision = Decision::not_one_query;
  std::optional<WeightCertificate> certificate;
  /// Minimal agreeing degree, nullopt if above full_degree_cap.
  std::optional<int> degree;
  std::optional<PartialBooleanFunction> canonical;
  /// Present when the solver ran and found no certificate.
  std::optional<Infeasibility> infeasibility;
  bool rejected_by_degree = false;
  std::vector<std::string> notes;
};

/// Degree filter, then the exact feasibility solver; a YES answer is only
/// returned after the Gram witness reproduces f exactly on the domain
/// (std::logic_error otherwise).
Classification is_one_query(const PartialBooleanFunction& f, const ClassifyOptions& options = {});

struct ScanOptions {
  bool dedup = true;
  /// 0: ONEQ_THREADS, else hardware concurrency.
  unsigned threads = 0;
};

struct ClassRepresentative {
  PartialBooleanFunction function;  // canonical form when deduplicating
  std::size_t members = 1;
  Decision decision = Decision::not_one_query;
  std::optional<WeightCertificate> certificate;
  std::optional<int> degree;
};

struct SearchSummary {
  int n = 0;
  bool total_only = false;
  bool dedup = false;
  std::size_t examined = 0;
  std::size_t one_query_functions = 0;
  /// Class counts under the full group (with output negation) ...
  std::size_t classes = 0;
  std::size_t one_query_classes = 0;
  /// ... and without output negation.
  std::size_t classes_without_negation = 0;
  std::size_t one_query_classes_without_negation = 0;
  /// Functions whose degree exceeds 2 yet are feasible. Always expected 0.
  std::size_t degree_filter_exceptions = 0;
  /// Functions with degree > 2 (all re-solved to confirm infeasibility).
  std::size_t rejected_by_degree = 0;
  /// Totals only: one-query set equals constants + dictators + 2-parities.
  std::optional<bool> characterization_holds;
  /// Deduplicated: one per class. Otherwise: every one-query function.
  std::vector<ClassRepresentative> representatives;
};

/// All 2^(2^n) total functions, n <= 4.
SearchSummary scan_total(int n, const ScanOptions& options = {});
/// All 3^(2^n) - 1 non-empty partial functions, n <= 3. Assignments are
/// base-3 codes over {0,1}^n in bit-string order (digit 0 undefined, 1 value
/// 0, 2 value 1).
SearchSummary scan_partial(int n, const ScanOptions& options = {});

/// Total functions isomorphic to a constant, x_i or x_i xor x_j, as truth
/// tables indexed by bit-string value.
std::vector<std::vector<bool>> total_one_query_characterization(int n);

/// True iff some isomorph of f (output negation included) has its 1-set
/// inside {x : |x| = 0 or |x| = n}.
bool has_extreme_isomorph(const PartialBooleanFunction& f);

/// f4 is one-query and no isomorph confines its 1-set to the extreme weights.
bool rediscover_f4();
/// Same test for any f.
bool one_query_without_extreme_isomorph(const PartialBooleanFunction& f);

/// Worker count from ONEQ_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

}  // namespace oneq
