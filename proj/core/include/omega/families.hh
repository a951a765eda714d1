#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <omega/automaton.hh>

namespace omega::families
{
  // All constructors use the alphabet {0, 1, $} and throw input_error for
  // n < 1. Unless noted otherwise, q_i has index i and f (when present) has
  // index n + 1.

  /// NFA for L_n = {0,1}* 1 {0,1}^{n-1} $ with n+2 states.
  automaton build_an(unsigned n);
  /// NFA for "n-th letter from the end is 1" over {0,1}; q_n final, no $ edges.
  automaton build_an_prime(unsigned n);
  /// NBA for L_n^omega, obtained from A_n by returning to q0 wherever it
  /// would block. n+2 states, 3n+7 transitions.
  automaton build_gn(unsigned n);
  /// DFA for L_n: the subset construction of A_n' (state 0 = {q0}) plus a
  /// fresh final f (last index) entered on $ from the subsets holding q_n.
  automaton build_bn(unsigned n);
  /// DBA for L_n^omega: loopify(B_n). Deterministic and complete.
  automaton build_dn(unsigned n);
  /// Reachability NBA for L_n^r; f is an accepting sink.
  automaton build_rn(unsigned n);
  /// Safety NBA for L_n^s; n+1 states, all final.
  automaton build_sn(unsigned n);
  /// Separating NBA for L_n^r; q_n and f final, delta(q_n,$) = {q_0..q_n, f},
  /// delta(f,0) = {f, q_1}, delta(f,1) = {f}.
  automaton build_rn_prime(unsigned n);
  /// DFA for {0,1}^n {0,1}* $ with n+2 states (partial).
  automaton build_cn(unsigned n);
  /// DFA for Gamma_n = {0,1}* 0 {0,1}^{n-1} $, the subset construction of
  /// the obvious n+2 state NFA.
  automaton build_gamma_dfa(unsigned n);

  /// Complete deterministic Buchi automaton for the language of a safety or
  /// reachability NBA, by subset construction and a non-final sink. For
  /// these two classes the powerset automaton is exact on infinite words.
  /// Throws contract_error for other automata.
  automaton powerset_dba(const automaton& safety_or_reachability);

  /// powerset_dba(build_sn(n)) and powerset_dba(build_rn(n)).
  automaton build_sn_dba(unsigned n);
  automaton build_rn_dba(unsigned n);

  /// Names accepted by build_family, in a fixed order.
  const std::vector<std::string>& family_names();
  /// Dispatch by name ("An", "AnPrime", "Gn", "Bn", "Dn", "Rn", "Sn",
  /// "RnPrime", "Cn", "Gamma", "SnDba", "RnDba"); case-insensitive.
  automaton build_family(std::string_view name, unsigned n);
}
