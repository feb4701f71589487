// fir: decide whether a finite group has a faithful irreducible
// representation, with an exact character-table cross-check.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fir/analysis.hpp"
#include "fir/corpus.hpp"

namespace {

int order_cap_from_env() {
  if (const char* cap = std::getenv("FIR_ORDER_CAP")) {
    try {
      const int v = std::stoi(cap);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid FIR_ORDER_CAP\n";
  }
  return fir::kDefaultOrderCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"faithful irreducible representation analyzer"};
  app.require_subcommand(1);

  std::string group_spec;
  long long characteristic = 0;
  bool with_oracle = false;
  bool as_json = false;
  int jobs = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "run all criteria on one group");
  analyze->add_option("--group", group_spec, "group spec")->required();
  analyze->add_option("--char", characteristic, "field characteristic (0 or prime)");
  analyze->add_flag("--oracle", with_oracle, "also compute the exact character table");
  analyze->add_flag("--json", as_json, "emit JSON");

  CLI::App* ctable = app.add_subcommand("ctable", "print the exact character table");
  ctable->add_option("--group", group_spec, "group spec")->required();
  ctable->add_flag("--json", as_json, "emit JSON");

  CLI::App* corpus = app.add_subcommand("corpus", "run the builtin corpus and check invariants");
  corpus->add_flag("--with-oracle", with_oracle, "cross-check every group against the oracle");
  corpus->add_option("--jobs", jobs, "parallel workers (default 1)");

  CLI11_PARSE(app, argc, argv);
  const int order_cap = order_cap_from_env();

  try {
    if (analyze->parsed()) {
      if (characteristic < 0 ||
          (characteristic != 0 && !fir::is_prime(static_cast<std::uint64_t>(characteristic)))) {
        std::cerr << "error: --char must be 0 or a prime\n";
        return 2;
      }
      fir::GroupSpec spec = fir::GroupSpec::parse(group_spec);
      fir::AnalysisReport report = fir::analyze_group(spec, characteristic, with_oracle, order_cap);
      std::cout << (as_json ? fir::report_to_json(report) : fir::report_to_text(report));
      return report.criteria.verdict ? 0 : 1;
    }
    if (ctable->parsed()) {
      fir::GroupSpec spec = fir::GroupSpec::parse(group_spec);
      fir::FiniteGroup g = spec.build(order_cap);
      fir::CharacterTable t = fir::dixon_table(g);
      std::cout << (as_json ? fir::table_to_json(spec.to_string(), g, t)
                            : fir::table_to_text(spec.to_string(), g, t));
      return 0;
    }
    if (corpus->parsed()) {
      auto results = fir::run_corpus(with_oracle, jobs, order_cap);
      std::cout << fir::corpus_matrix_text(results);
      for (const auto& r : results)
        if (!r.violations.empty()) return 1;
      return 0;
    }
  } catch (const fir::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
