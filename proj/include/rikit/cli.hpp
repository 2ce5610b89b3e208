#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rikit {

// Entry point behind the rikit binary; exposed so the CLI surface can be
// driven in-process by the tests. Returns the process exit code:
// 0 success, 1 evaluation/check failure, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rikit
