#pragma once

#include <ostream>

namespace longcycles::cli {

// Exit codes: 0 success, 1 invalid certificate (or an invalid sweep row),
// 2 usage or input error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace longcycles::cli
