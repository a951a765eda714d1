#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <omega/automaton.hh>
#include <omega/mdp.hh>
#include <omega/rational.hh>

namespace oracle
{
  using omega::automaton;
  using omega::finite_word;
  using omega::labelled_mdp;
  using omega::lasso_word;
  using omega::rational;
  using omega::state_t;
  using omega::symbol_t;

  inline constexpr symbol_t zero = 0, one = 1, dollar = 2;

  /// Depth-first enumeration of every individual run.
  bool accepts_by_runs(const automaton& a, const finite_word& w);

  /// Boolean-matrix characterisation: some state p is reachable after
  /// stem.loop^i and returns to itself through loop^j, 1 <= j <= |Q|,
  /// visiting a final state on the way.
  bool lasso_accepts_by_matrices(const automaton& a, const lasso_word& w);

  /// Every word over `letters` symbols of length lo..hi, shortlex order.
  std::vector<finite_word> all_words(std::size_t letters, std::size_t lo, std::size_t hi);

  /// Every lasso with |stem| <= max_stem and 1 <= |loop| <= max_loop.
  std::vector<lasso_word> all_lassos(std::size_t letters, std::size_t max_stem,
                                     std::size_t max_loop);

  // Language predicates written directly from the set definitions.
  bool in_ln(unsigned n, const finite_word& w);
  bool in_gamma(unsigned n, const finite_word& w);
  bool in_ln_omega(unsigned n, const lasso_word& w);
  bool in_ln_r(unsigned n, const lasso_word& w);
  bool in_ln_s(unsigned n, const lasso_word& w);

  /// Size of the minimal complete DFA by naive Moore refinement of the
  /// reachable part.
  std::size_t moore_min_size(const automaton& complete_dfa);

  /// Language probability of a sigma chain, by enumerating every cylinder
  /// of the given depth. Paths that emitted $ are decided by `in_lang` on
  /// their (ultimately periodic) trace; the remaining mass is undecided.
  struct cylinder_bounds
  {
    rational lower;
    rational upper;
  };
  template <class Pred>
  cylinder_bounds sigma_chain_cylinders(const labelled_mdp& chain, std::size_t depth, Pred in_lang);

  /// Buchi probability of a chain and a deterministic complete automaton
  /// as the limit of P(at least k visits to a final state), iterated in
  /// floating point.
  double buchi_probability_by_visits(const labelled_mdp& chain, const automaton& dba,
                                     unsigned visits = 400);

  /// Maximal reachability values by Bellman value iteration in doubles.
  std::vector<double> value_iteration(const labelled_mdp& m, const std::vector<bool>& target,
                                      unsigned sweeps = 20000);

  /// True iff values are a fixed point of the exact Bellman operator.
  bool is_bellman_fixed_point(const labelled_mdp& m, const std::vector<bool>& target,
                              const std::vector<rational>& values);

  /// Maximal end components by enumerating every subset of states.
  std::set<std::vector<state_t>> brute_force_mecs(const labelled_mdp& m);

  /// Random small MDP with several actions per state and some deficits.
  labelled_mdp random_mdp(std::uint64_t seed, std::size_t states, std::size_t max_actions);

  /// Random automaton over {0,1,$}.
  automaton random_automaton(std::uint64_t seed, std::size_t states, double edge_density,
                             omega::acceptance_mode mode);
}

#include "oracles_impl.hh"
