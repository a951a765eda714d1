#pragma once

#include <iosfwd>

namespace omega::tools
{
  /// Exit codes: 0 success, 1 a checked property failed, 2 malformed
  /// input or usage error.
  int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
}
