#pragma once

#include <ostream>

namespace echkit::cli {

/// Runs one command line. Returns 0 on success, 1 on input or validation
/// errors (reported on `err`) and 2 when a verification finds violations.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace echkit::cli
