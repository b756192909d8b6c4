#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critpath {

// Exit codes: 0 success, 1 validation/parse error, 2 oracle disagreement,
// 3 enumeration overflow.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace critpath
