#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supercoinv {

/// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or resource error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace supercoinv
