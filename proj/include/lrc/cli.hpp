#pragma once

#include <iosfwd>

namespace lrc {

// Exit status: 0 success, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lrc
