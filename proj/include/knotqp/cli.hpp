#pragma once

#include <iosfwd>

namespace knotqp {

// Exit codes: 0 success, 1 a verification check or asserted identity failed,
// 2 usage, parse or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotqp
