#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace george {

// Exit codes: 0 ok, 1 usage error, 2 counterexample / sweep disagreement,
// 3 inconclusive elements remain, 4 invalid element.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace george
