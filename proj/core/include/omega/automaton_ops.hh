#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <omega/automaton.hh>

namespace omega
{
  // ---------------------------------------------------------------------
  // Membership
  // ---------------------------------------------------------------------

  /// Finite-word acceptance by forward simulation of the reachable state set.
  /// Requires finite acceptance mode; throws input_error on foreign letters.
  bool accepts_finite(const automaton& a, const finite_word& w);

  /// Buchi acceptance of stem.loop^omega. Searches the graph of
  /// (state, position-in-lasso) pairs for a reachable cycle through a final
  /// state inside the loop section.
  bool accepts_lasso(const automaton& a, const lasso_word& w);

  /// States reachable from the initial state, ascending.
  std::vector<state_t> reachable_states(const automaton& a);

  /// Drops unreachable states. Surviving states keep their relative order.
  automaton trim_unreachable(const automaton& a);

  // ---------------------------------------------------------------------
  // Finite-word constructions
  // ---------------------------------------------------------------------

  /// Reachable-subset determinisation. The empty subset is not materialised,
  /// so the result is deterministic but possibly partial. State 0 is
  /// {q0}; further subsets are numbered in breadth-first discovery order,
  /// letters in alphabet order. A subset is final iff it meets a's finals.
  /// The input's mode is kept.
  automaton subset_construction(const automaton& a);

  /// Same construction, also returning the subset each state stands for.
  struct subset_automaton
  {
    automaton dfa;
    std::vector<std::vector<state_t>> subsets;
  };
  subset_automaton subset_construction_with_subsets(const automaton& a);

  /// Adds one non-final sink (last index) receiving every missing
  /// transition; returns the input unchanged if it is already complete.
  automaton complete_with_sink(const automaton& a);

  /// Hopcroft partition refinement on the reachable part of a complete DFA.
  /// Output states are numbered in breadth-first order from the initial one.
  automaton hopcroft_minimize(const automaton& d);

  struct equivalence_result
  {
    bool equivalent = true;
    /// Shortest, then lexicographically least, distinguishing word.
    std::optional<finite_word> counterexample;
  };

  /// Language equivalence of two complete DFAs over the same alphabet.
  equivalence_result dfa_equivalent(const automaton& d1, const automaton& d2);

  /// Full (unpruned) product; state (i, j) has index i * |d2| + j.
  automaton intersect_dfa(const automaton& d1, const automaton& d2);
  automaton complement_dfa(const automaton& d);

  /// True iff no final state is reachable (finite-word emptiness).
  bool is_empty_finite(const automaton& a);

  // ---------------------------------------------------------------------
  // Buchi constructions
  // ---------------------------------------------------------------------

  /// Two-phase product of Buchi automata, reachable part only. States
  /// (q1, q2, phase) are numbered in breadth-first discovery order from
  /// (q1_0, q2_0, 1).
  automaton intersect_nba(const automaton& a1, const automaton& a2);

  struct emptiness_result
  {
    bool empty = true;
    std::optional<lasso_word> witness;
  };

  /// Nonempty iff a reachable nontrivial SCC contains a final state. The
  /// witness stem is a shortest path to such a final state f and the loop is
  /// a shortest cycle through f.
  emptiness_result is_empty_buchi(const automaton& a);

  /// An accepting lasso together with the run that realises it.
  struct accepting_lasso
  {
    lasso_word word;
    /// States before each stem letter (|stem| entries).
    std::vector<state_t> stem_states;
    /// States before each loop letter (|loop| entries); loop_states[0]
    /// is final and is re-entered after the last loop letter.
    std::vector<state_t> loop_states;
  };
  std::optional<accepting_lasso> find_accepting_lasso(const automaton& a);

  /// Replaces every empty delta(q, a) by {initial} and switches to Buchi
  /// acceptance. Turns A_n into G_n and B_n into D_n.
  automaton loopify(const automaton& a);

  /// Default bound 2 * max(|Q1|, |Q2|) + 2.
  std::size_t default_lasso_bound(const automaton& a1, const automaton& a2);

  struct lasso_equivalence_result
  {
    bool equivalent = true;
    std::optional<lasso_word> counterexample;
    /// Distinct loop behaviours examined; for diagnostics only.
    std::size_t loop_profiles = 0;
    std::size_t stem_pairs = 0;
  };

  /// Bounded oracle: do a1 and a2 agree on every stem.loop^omega with
  /// |stem| <= bound and 1 <= |loop| <= bound? Exhaustive, but organised by
  /// transition profiles of loops and reachable subset pairs of stems so
  /// that the cost does not grow with |Sigma|^bound. Throws input_error for
  /// bound < 1.
  lasso_equivalence_result buchi_equiv_on_lassos(const automaton& a1,
                                                 const automaton& a2,
                                                 std::size_t bound);
}
