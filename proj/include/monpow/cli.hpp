#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monpow {

/// Runs the command line `args` (without the program name). Returns 0 when
/// the queried property holds or the monomial is a member, 1 when it fails,
/// 2 on usage errors, malformed input or guard refusals.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monpow
