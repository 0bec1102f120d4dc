#pragma once

#include <iosfwd>

namespace ordent::cli {

/// Runs one command line. Returns 0 on success, 2 for usage errors and
/// invalid arguments, 1 for data, parse and I/O errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordent::cli
