#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <omega/automaton.hh>
#include <omega/product.hh>
#include <omega/rational.hh>

namespace omega
{
  /// Two runs of one automaton over the same lasso word; both are lasso
  /// shaped with the word's stem and loop lengths.
  struct run_pair
  {
    lasso_word word;
    std::vector<state_t> first_stem, first_loop;
    std::vector<state_t> second_stem, second_loop;
  };

  struct ambiguity_result
  {
    bool holds = true;
    std::optional<run_pair> witness;
  };

  /// At most one accepting run per infinite word. Otherwise the witness
  /// carries two different accepting runs.
  ambiguity_result is_unambiguous(const automaton& a);
  /// At most one infinite run per infinite word. Otherwise the witness
  /// carries two different infinite runs.
  ambiguity_result is_strongly_unambiguous(const automaton& a);

  struct separation_result
  {
    bool holds = true;
    std::optional<state_t> p, q;
    std::optional<lasso_word> word;  // accepted from both p and q
  };

  /// Distinct states have disjoint Buchi languages.
  separation_result is_separating(const automaton& a);

  enum class language_flavor
  {
    reach,
    safety,
  };

  const char* to_string(language_flavor f) noexcept;
  /// "reach" or "safety"; throws input_error otherwise.
  language_flavor parse_flavor(const std::string& text);

  /// 2^-(n+1) + sum_i sigma_i 2^-i.
  rational sigma_chain_value(const std::vector<bool>& sigma);

  struct sigma_instance
  {
    std::vector<bool> sigma;
    rational syntactic;
    rational semantic;
    /// Semantic value recomputed through the reference deterministic automaton.
    rational reference;
    bool attains = false;
    /// Automaton state paired with s_n when the optimal strategy first
    /// reaches it; empty when s_n is not reached with positive probability.
    std::optional<state_t> paired_state;
  };

  struct lower_bound_report
  {
    unsigned n = 0;
    language_flavor flavor = language_flavor::safety;
    successor_choice choice = successor_choice::per_letter;
    std::size_t candidate_states = 0;
    std::vector<sigma_instance> instances;

    /// The formula agrees with the reference automaton on every sigma.
    bool formula_matches_reference = false;
    /// The 2^n semantic values are pairwise distinct.
    bool values_distinct = false;
    /// The candidate reaches the semantic value on every sigma.
    bool attains_all = false;
    /// Some sigma where the candidate falls short of the semantic value.
    bool shortfall = false;
    /// Distinct paired states; only a lower bound certificate if attains_all.
    std::size_t distinct_paired_states = 0;

    /// Bounded lasso comparison of the candidate with the reference
    /// automaton (empty when skipped).
    std::optional<std::size_t> lasso_bound;
    std::optional<bool> lasso_equivalent;
  };

  /// Sweeps all 2^n sigma chains. With `lasso_bound` set, the candidate is
  /// first compared with the reference deterministic automaton on lassos
  /// up to that bound. Throws contract_error if s_n can be first reached
  /// with two different automaton states under the optimal strategy.
  lower_bound_report gfm_lower_bound_experiment(unsigned n, const automaton& candidate,
                                                language_flavor flavor,
                                                std::optional<std::size_t> lasso_bound,
                                                successor_choice choice = successor_choice::per_letter);

  struct spot_check_case
  {
    std::uint64_t seed = 0;
    std::size_t chain_states = 0;
    rational syntactic;  // through G_n
    rational semantic;   // through D_n
    bool equal = false;
  };

  struct spot_check_report
  {
    unsigned n = 0;
    successor_choice choice = successor_choice::per_letter;
    std::vector<spot_check_case> cases;
    bool all_equal() const;
  };

  /// Number of states and density used for the random chains.
  inline constexpr std::size_t spot_check_chain_states = 5;
  inline constexpr double spot_check_density = 0.6;

  /// For every seed: random chain m, compare psyn(m, G_n) with psem(m, D_n).
  spot_check_report gfm_spot_check(unsigned n, const std::vector<std::uint64_t>& seeds,
                                   successor_choice choice = successor_choice::per_letter);
}
