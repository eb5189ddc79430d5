#pragma once

namespace vvlab {

/// Command-line entry point. Exit codes: 0 success, 1 usage/configuration
/// error, 2 numerical failure (blow-up or NaN; failure time on stderr),
/// 3 check suite failure.
int run_cli(int argc, const char* const* argv);

}  // namespace vvlab
