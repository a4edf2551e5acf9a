#pragma once

namespace resample::cli {

// Entry point behind the resample_bench binary. Subcommands: bench,
// demo-sparse, filters, recover. Returns 0 on success, 1 on usage errors,
// 2 on data errors.
int cli_main(int argc, const char* const* argv);

}  // namespace resample::cli
