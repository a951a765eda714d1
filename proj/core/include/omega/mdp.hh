#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <omega/automaton.hh>
#include <omega/rational.hh>

namespace omega
{
  struct mdp_edge
  {
    rational probability;
    symbol_t label;
    state_t target;

    bool operator==(const mdp_edge&) const = default;
  };

  struct mdp_action
  {
    std::string name;
    std::vector<mdp_edge> edges;

    /// Sum of the edge probabilities (at most 1; the rest is the deficit).
    rational mass() const;
    bool operator==(const mdp_action&) const = default;
  };

  /// Finite transition-labelled MDP. Each (state, action) carries a
  /// subdistribution over (label, successor) pairs; the missing mass is an
  /// implicit move to an absorbing rejecting state. A Markov chain is an MDP
  /// with exactly one action per state.
  class labelled_mdp
  {
  public:
    labelled_mdp() = default;
    labelled_mdp(alphabet sigma, std::size_t num_states, state_t initial);

    const alphabet& get_alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return actions_.size(); }
    state_t initial() const noexcept { return initial_; }
    const std::vector<mdp_action>& actions(state_t s) const { return actions_.at(s); }

    state_t add_state();
    std::size_t add_action(state_t s, std::string name);
    /// Throws input_error for non-positive probabilities, bad indices or when
    /// the action's mass would exceed 1.
    void add_edge(state_t s, std::size_t action, rational p, symbol_t label, state_t target);
    void set_initial(state_t s);

    /// |Act(s)| == 1 for every state.
    bool is_markov_chain() const;
    /// Every action's mass is exactly 1.
    bool is_full_support() const;

    bool operator==(const labelled_mdp&) const = default;

  private:
    void check_state(state_t s) const;

    alphabet alphabet_;
    state_t initial_ = 0;
    std::vector<std::vector<mdp_action>> actions_;
  };

  /// Finite path s0 a1 l1 s1 ... ; action/label/state vectors are aligned.
  struct mdp_run
  {
    state_t start = 0;
    std::vector<std::size_t> actions;
    std::vector<symbol_t> labels;
    std::vector<state_t> states;

    /// Every step has positive probability in m.
    bool respects(const labelled_mdp& m) const;
  };

  /// The chain s_0 -> ... -> s_n reading sigma_1..sigma_n with probability 1,
  /// s_n looping on 0 and 1 with 1/4 each and moving to s_f on $ with 1/2,
  /// and s_f looping on $. States s_i have index i; s_f has index n + 1.
  /// The single action is named "m". Throws input_error if |sigma| != n.
  labelled_mdp build_sigma_mc(unsigned n, const std::vector<bool>& sigma);

  /// Reproducible random Markov chain over `labels`: every row sums to one
  /// exactly, every state is reachable from state 0. `density` in (0, 1]
  /// scales the expected number of (label, successor) pairs per state.
  labelled_mdp build_random_mc(std::uint64_t seed, std::size_t num_states,
                               const alphabet& labels, double density);

  /// Exact probability that the label sequence of chain `mc` lies in the
  /// language of the deterministic complete Buchi automaton `dba`: bottom
  /// SCCs of the synchronous product are classified, then hitting
  /// probabilities are solved exactly. Throws contract_error if mc is not a
  /// chain or dba is not deterministic and complete.
  rational mc_language_probability(const labelled_mdp& mc, const automaton& dba);

  // JSON exchange: {"states": N, "initial": s, "alphabet": [...],
  //   "transitions": [{"from", "action", "prob": "num/den", "label", "to"}]}
  std::string to_json(const labelled_mdp& m);
  /// Throws parse_error on malformed documents.
  labelled_mdp mdp_from_json(std::string_view text);
  labelled_mdp read_mdp_json(std::istream& in);
}
