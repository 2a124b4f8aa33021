#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "assoc/fgroup.hpp"

// Exhaustive desk-scale verification suites. Each suite sweeps every
// expression in its leaf-count range, records counterexamples instead of
// aborting, and produces the same report content for a fixed (suite, range,
// seed) regardless of the job count: only the timing varies.

namespace assoc {

struct Violation {
  std::string input;    // offending case, rendered as text
  std::string message;  // which property failed and how
};

struct VerificationReport {
  std::string suite;
  int n_min = 1;
  int n_max = 1;
  long long cases_checked = 0;
  std::vector<std::pair<int, long long>> cases_per_n;  // breakdown for the text report
  std::vector<Violation> violations;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
};

std::string report_to_text(const VerificationReport& r);
nlohmann::ordered_json report_to_json(const VerificationReport& r);

// The moves a suite exercises. Tests substitute deliberately wrong tables to
// prove the suites can fail; the defaults are the real moves.
struct MoveTable {
  std::function<bool(int, const Expression&)> can_apply = &assoc::can_apply;
  std::function<Expression(int, const Expression&)> apply_alpha = &assoc::apply_alpha;
  std::function<Expression(int, const Expression&)> apply_alpha_inv = &assoc::apply_alpha_inv;
  std::function<std::pair<Expression, Expression>(int)> generator_template = &assoc::generator_template;
};

struct SuiteOptions {
  int jobs = 1;
  unsigned seed = 0;  // reserved for randomized extensions; the shipped suites are exhaustive
  MoveTable moves;
};

// The five applicability/progress observations, for every expression with
// 1..n_max leaves.
VerificationReport check_observations(int n_max, const SuiteOptions& opts = {});

// For every expression, brute-force search over all positive words with
// non-decreasing indices finds exactly one word reaching the left comb, and
// it is normalize_word's output.
VerificationReport check_lemma_uniqueness(int n_max, const SuiteOptions& opts = {});

// Whenever a<i> and a<j> both apply with i < j, doing a<i> then a<j+1>
// equals doing a<j> then a<i>.
VerificationReport check_rectangle(int n_max, const SuiteOptions& opts = {});

// All positive move paths between a fixed ordered pair of expressions have
// the same rewrite_positive normal form and the same tree-pair image.
VerificationReport check_parallel_paths(int n_max, const SuiteOptions& opts = {});

// The four-leaf non-spine rotation is expressed by the word a0 a0 A1 A0, and
// every non-spine rotation up to n_max leaves is reproduced by its canonical
// word.
VerificationReport check_pentagon(int n_max = 7, const SuiteOptions& opts = {});

// Relation instances [a_j a_i] = [a_i a_{j+1}] for i < j <= i_max, and
// conjugation by a0 carrying a_j to a_{j+1}.
VerificationReport check_presentation(int i_max, const SuiteOptions& opts = {});

}  // namespace assoc
