#pragma once

#include <iosfwd>

namespace hhht {

/// Entry point for the `hhht` tool. Exit codes: 0 success, 1 domain/resource
/// error or failed verification, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hhht
