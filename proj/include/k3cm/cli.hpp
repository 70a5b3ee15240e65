#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3cm {

// the command-line front end; args exclude the program name. Exit codes:
// 0 success, 1 data inconsistency or failed checks, 2 schema/usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace k3cm
