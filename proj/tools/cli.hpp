#pragma once

namespace tracemonoid::cli {

/// Parse and dispatch one command line.  Returns the process exit status:
/// 0 on success, 1 when the inputs are valid but the operation does not
/// apply, 2 on usage or parse errors.
int run(int argc, const char* const* argv);

} // namespace tracemonoid::cli
