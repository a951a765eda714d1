#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <omega/automaton.hh>
#include <omega/mdp.hh>
#include <omega/rational.hh>

namespace omega
{
  /// How a product action resolves the automaton's nondeterminism.
  enum class successor_choice
  {
    /// Action (a, q') fixes q' before the letter is drawn; edges whose
    /// letter cannot lead to q' are lost to the reject sink.
    per_action,
    /// Action (a, g) fixes a successor g(sigma) in delta(q, sigma) for
    /// every letter sigma that a can emit.
    per_letter,
  };

  const char* to_string(successor_choice c) noexcept;
  /// "per-action" or "per-letter"; throws input_error otherwise.
  successor_choice parse_successor_choice(const std::string& text);

  struct product_action_origin
  {
    std::size_t base = 0;
    /// Automaton successor used for each letter; empty where the letter
    /// leads to the reject sink.
    std::vector<std::optional<state_t>> successor;
  };

  /// Product of a labelled MDP with a Buchi automaton. Missing mass goes to
  /// an explicit absorbing reject sink.
  struct product_mdp
  {
    labelled_mdp mdp;
    std::vector<bool> accepting;
    /// (mdp state, automaton state); empty for the reject sink.
    std::vector<std::optional<std::pair<state_t, state_t>>> origin;
    std::vector<std::vector<product_action_origin>> action_origin;
    std::optional<state_t> reject_sink;

    std::string state_name(state_t p) const;
  };

  /// Reachable part only, breadth-first numbering from (s0, q0); the reject
  /// sink, if needed, is the last state. Actions of a product state are
  /// ordered by base action, then by the chosen successors. Throws
  /// input_error if the alphabets differ.
  product_mdp build_product(const labelled_mdp& m, const automaton& a,
                            successor_choice choice = successor_choice::per_action);

  struct end_component
  {
    std::vector<state_t> states;
    /// actions[i] are the actions of states[i] that stay inside.
    std::vector<std::vector<std::size_t>> actions;
  };

  /// Maximal end components by iterated SCC refinement, sorted by their
  /// smallest state.
  std::vector<end_component> mec_decomposition(const labelled_mdp& m);
  /// MECs of p.mdp that contain an accepting product state.
  std::vector<end_component> accepting_mecs(const product_mdp& p);

  /// One chosen action per state; empty for states without actions.
  using positional_strategy = std::vector<std::optional<std::size_t>>;

  struct reach_result
  {
    std::vector<rational> values;
    positional_strategy strategy;
    std::size_t iterations = 0;
  };

  /// Optimal maximal probabilities of eventually reaching `target` and an
  /// optimal positional strategy (policy iteration over exact rationals).
  reach_result max_reach_probability(const labelled_mdp& m, const std::vector<bool>& target);

  /// Markov chain obtained by fixing `strategy` in m.
  labelled_mdp induced_chain(const labelled_mdp& m, const positional_strategy& strategy);

  /// Probability of eventually reaching `target` from each state of a chain.
  std::vector<rational> chain_reach_probability(const labelled_mdp& chain,
                                                const std::vector<bool>& target);

  struct psyn_analysis
  {
    product_mdp product;
    std::vector<end_component> mecs;
    std::vector<bool> target;
    reach_result reach;
    rational value;
  };

  psyn_analysis analyze_psyn(const labelled_mdp& m, const automaton& a,
                             successor_choice choice = successor_choice::per_action);
  rational psyn(const labelled_mdp& m, const automaton& a,
                successor_choice choice = successor_choice::per_action);

  /// Probability that the chain's trace lies in L(dba). The caller vouches
  /// that dba is equivalent to the automaton under study.
  rational psem(const labelled_mdp& chain, const automaton& dba);
}
