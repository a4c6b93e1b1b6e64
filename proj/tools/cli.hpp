#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revclone::cli
{

enum exit_code : int
{
  ok = 0,
  verdict_false = 1,
  usage_error = 2,
  cap_overflow = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run( std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace revclone::cli
