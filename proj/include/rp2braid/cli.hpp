#pragma once

#include <iosfwd>

namespace rp2braid::cli {

// Exit codes: 0 ok, 1 a check failed, 2 usage error. A JSON report is always written.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rp2braid::cli
