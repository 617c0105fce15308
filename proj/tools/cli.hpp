#pragma once

namespace basel::cli {

/// Exit codes: 0 success, 1 i/o or internal failure, 2 usage error,
/// 3 numerical failure.
int run(int argc, const char* const* argv);

} // namespace basel::cli
