#pragma once

#include <iosfwd>

namespace nadslab::cli {

// Full command-line front end, parameterized on streams so tests can run
// it in-process.
//
// Exit codes: 0 every check passed; 1 a check was falsified (including
// falsification-class errors escaping a verifier); 2 invalid usage or
// malformed input; 3 materialization cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nadslab::cli
