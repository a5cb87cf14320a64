#pragma once

#include <ostream>

// Command dispatch for the projcoh tool. Exposed as a function so the test
// suite can drive the real CLI in-process with captured streams.
// Exit codes: 0 success, 1 domain error, 2 usage error.
int projcoh_cli_run(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err);
