#pragma once

#include <ostream>

namespace mcam {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitDegenerate = 2;

/// Entry point of the `mcam` tool:
///   run <config> [--out <csv>] [--metrics <json>]
///   certify <config>
///   compare-guidance <config> [--out-mcpg <csv>] [--out-ppng <csv>] [--residual <csv>] [--metrics <json>]
///   sweep --gain <list> <config>
/// Gains in the sweep list are values of mu, or multiples of the certificate mu when suffixed with 'x'.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcam
