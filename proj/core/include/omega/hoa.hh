#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <omega/automaton.hh>

namespace omega
{
  /// Writes a conservative HOA v1 subset. Each alphabet symbol is one atomic
  /// proposition and a letter is the valuation making exactly that
  /// proposition true. Buchi automata use `Acceptance: 1 Inf(0)` with
  /// state-based marks; finite-word automata use `Acceptance: 0 f` and list
  /// their finals in the ignorable `finals:` header. Edges are emitted per
  /// state, letters in alphabet order, targets ascending.
  void write_hoa(std::ostream& out, const automaton& a, std::string_view name = {});
  std::string to_hoa(const automaton& a, std::string_view name = {});

  /// Reads what write_hoa writes (plus comments and free whitespace).
  /// Throws parse_error with a line number on anything else.
  automaton read_hoa(std::istream& in);
  automaton parse_hoa(std::string_view text);

  /// Graphviz rendering; finals are double circles, parallel letters merged.
  void write_dot(std::ostream& out, const automaton& a, std::string_view name = {});
  std::string to_dot(const automaton& a, std::string_view name = {});
}
