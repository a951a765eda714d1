#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <omega/automaton.hh>
#include <omega/rational.hh>

namespace omega
{
  enum class mark_phase
  {
    final_state,  // marked "0" because the state is final
    binary_path,  // a word over {0,1}+ leads to a final state
    gamma_path,   // a word of Gamma_n leads to an earlier marked state
  };

  const char* to_string(mark_phase p) noexcept;

  /// Partial marking V : Q -> Sigma+ together with the order in which the
  /// states received their words.
  struct marking
  {
    std::vector<std::optional<finite_word>> word;
    std::vector<std::optional<mark_phase>> phase;
    std::vector<state_t> order;

    bool is_marked(state_t q) const { return word.at(q).has_value(); }
    /// Position of q in `order`; throws contract_error if q is unmarked.
    std::size_t order_index(state_t q) const;
    std::vector<state_t> unmarked() const;

    bool operator==(const marking&) const = default;
  };

  /// The full marking procedure on a complete DBA over {0, 1, $}. Witness
  /// words are shortest, then lexicographically least in alphabet order.
  /// The Gamma_n phase scans the unmarked states in ascending order, marks
  /// one state at a time, and stops after a scan that marks nothing.
  /// Throws contract_error for non-Buchi, nondeterministic or incomplete
  /// input, or an alphabet without the letters 0, 1 and $.
  marking run_marking(const automaton& d, unsigned n);
  /// Only the first two phases (final states, then {0,1}+ paths).
  marking run_marking_phases_1_2(const automaton& d);

  /// Every unmarked state has unmarked 0- and 1-successors.
  bool check_unmarked_closure(const automaton& d, const marking& m);

  /// Every recorded witness has the shape its phase requires and leads
  /// where it should (final state, or a state marked strictly earlier).
  bool check_marking_witnesses(const automaton& d, const marking& m, unsigned n);

  /// P: the unmarked part of d with every marked target redirected to one
  /// fresh accepting sink without outgoing transitions.
  struct collapsed_automaton
  {
    automaton p;
    /// P state -> d state, for every P state except the sink.
    std::vector<state_t> original;
    /// d state -> P state (the sink for marked states).
    std::vector<state_t> image;
    state_t sink = 0;
  };

  /// Throws contract_error if every state or no state is marked.
  collapsed_automaton collapse_to_p(const automaton& d, const marking& m);

  /// Exact check that no marked state is reachable by a Gamma_n word from
  /// any unmarked state, done on the product of P with the Gamma_n DFA.
  /// Returns a violating (P state, word) or nothing.
  std::optional<std::pair<state_t, finite_word>>
  find_gamma_accepting_state(const collapsed_automaton& c, unsigned n);

  /// Same property by brute force over all Gamma_n words of length at most
  /// max_length.
  std::optional<std::pair<state_t, finite_word>>
  enumerate_gamma_words(const collapsed_automaton& c, unsigned n, std::size_t max_length);

  /// Smallest P state q (excluding the sink) with L_n contained in
  /// L(P rooted at q), decided by emptiness of L(B_n) minus L(P_q).
  std::optional<state_t> find_universal_state(const collapsed_automaton& c, unsigned n);

  struct collapse_report
  {
    unsigned n = 0;
    std::size_t dn_states = 0;
    std::size_t min_dfa_states = 0;  // minimal complete DFA for L_n
    std::size_t marked = 0;
    std::size_t unmarked = 0;
    std::size_t p_states = 0;
    std::optional<state_t> universal_state;  // index in P
    rational bound;                          // 2^n / (n + 2)

    bool closure_after_phase2 = false;
    bool closure_final = false;
    bool witnesses_valid = false;
    bool has_unmarked = false;
    bool gamma_structural = false;
    bool gamma_enumerated = false;
    bool universal_state_found = false;
    bool intersection_is_ln = false;
    bool p_meets_bound = false;
    bool dn_meets_bound = false;

    bool all_pass() const;
  };

  /// Runs the whole chain of checks on D_n.
  collapse_report run_collapse_report(unsigned n);
  /// Same checks for a caller-supplied complete DBA assumed to recognise
  /// L_n^omega.
  collapse_report run_collapse_report(const automaton& d, unsigned n);
}
