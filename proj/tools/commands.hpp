#pragma once
#include <ostream>

namespace mlv::cli {

// Exit codes: 0 success or all verdicts pass, 1 some verdict not pass, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlv::cli
