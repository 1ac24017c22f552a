#pragma once

#include <iosfwd>

namespace gspec::cli {

enum Exit { kOk = 0, kInputError = 1, kDisagreement = 2 };

// Full command line, argv[0] included. Data goes to out unless --out is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gspec::cli
