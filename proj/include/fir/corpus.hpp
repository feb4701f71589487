#pragma once

// Builtin corpus and the harness that wires every cross-module invariant
// together. The corpus is code, not data files.

#include <string>
#include <vector>

#include "fir/analysis.hpp"

namespace fir {

std::vector<std::string> builtin_corpus();

struct GroupRunResult {
  std::string spec;
  AnalysisReport report;
  std::vector<std::string> violations;  // empty = all invariants hold
};

/// Analyze one group and check every cross-module invariant on it.
GroupRunResult run_group(const std::string& spec_text, bool with_oracle,
                         int order_cap = kDefaultOrderCap);

/// Data-parallel corpus run; results sorted by group spec.
std::vector<GroupRunResult> run_corpus(bool with_oracle, int jobs,
                                       int order_cap = kDefaultOrderCap);

std::string corpus_matrix_text(const std::vector<GroupRunResult>& results);

}  // namespace fir
