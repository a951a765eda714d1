#pragma once

#include <stdexcept>
#include <string>

namespace omega
{
  /// Malformed user input: unknown letters, bad parameters, unparsable files.
  class input_error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// Raised by the HOA and JSON readers.
  class parse_error : public input_error
  {
  public:
    using input_error::input_error;
  };

  /// A precondition on the shape of an argument was violated
  /// (e.g. a nondeterministic automaton passed where a DFA is required).
  class contract_error : public std::logic_error
  {
  public:
    using std::logic_error::logic_error;
  };
}
