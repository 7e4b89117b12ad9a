#pragma once

#include <ostream>

namespace crg::cli {

// Exit codes: 0 success, 1 result disagrees with the catalog, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crg::cli
