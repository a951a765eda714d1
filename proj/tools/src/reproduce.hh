#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report_json.hh"

namespace omega::tools
{
  struct suite_options
  {
    /// Caps the largest n of every check; each check has its own default.
    std::optional<unsigned> max_n;
    std::uint64_t seed_base = 0;
  };

  struct criterion_result
  {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;
    ordered_json details;
    double seconds = 0.0;
    std::optional<double> time_limit;
  };

  criterion_result check_example_chain(const suite_options& opt);
  criterion_result check_subset_lower_bound(const suite_options& opt);
  criterion_result check_loop_automata(const suite_options& opt);
  criterion_result check_gfm_spot(const suite_options& opt);
  criterion_result check_marking(const suite_options& opt);
  criterion_result check_sigma_family(const suite_options& opt);
  criterion_result check_ambiguity_properties(const suite_options& opt);
  criterion_result check_structural_counts(const suite_options& opt);
  /// Records the two substituted claims; passes iff the certificate that
  /// stands in for them (from check_sigma_family) holds.
  criterion_result check_substitutions(const criterion_result& sigma_family);

  std::vector<criterion_result> run_all(const suite_options& opt);

  /// Seed base from OMEGA_SUCCINCT_SEED, or `fallback` if unset. Throws
  /// input_error if the variable is not a non-negative integer.
  std::uint64_t seed_base_from_env(std::uint64_t fallback = 0);

  ordered_json suite_json(const std::vector<criterion_result>& results, const suite_options& opt,
                          bool with_timing);
  std::string suite_summary(const std::vector<criterion_result>& results);
}
