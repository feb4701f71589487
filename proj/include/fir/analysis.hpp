#pragma once

// Whole-group analysis: group metadata, criteria, optional oracle block, and
// serialization to the CLI's JSON schema and aligned text.

#include <optional>
#include <string>
#include <vector>

#include "fir/chartable.hpp"
#include "fir/criteria.hpp"
#include "fir/groupspec.hpp"

namespace fir {

struct OracleBlock {
  std::vector<long long> degrees;      // ascending
  bool faithful = false;
  long long witness_kernel_order = 0;  // minimum kernel order over all rows
};

struct AnalysisReport {
  std::string group;  // canonical spec text
  int order = 0;
  std::vector<int> pi;
  std::vector<int> minimal_normal_orders;
  int center_order = 0;
  CriterionReport criteria;
  std::optional<OracleBlock> oracle;
  double timing_ms = 0.0;
};

AnalysisReport analyze_group(const GroupSpec& spec, long long characteristic, bool with_oracle,
                             int order_cap = kDefaultOrderCap);

std::string report_to_json(const AnalysisReport& r);  // schema-stable, ordered keys
std::string report_to_text(const AnalysisReport& r);

std::string table_to_json(const std::string& group, const FiniteGroup& g,
                          const CharacterTable& t);
std::string table_to_text(const std::string& group, const FiniteGroup& g,
                          const CharacterTable& t);

}  // namespace fir
