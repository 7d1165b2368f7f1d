#pragma once

namespace cwb {

// Exit status taxonomy shared by every subcommand: scripts can tell a
// definite answer from an honest "don't know".
inline constexpr int kExitDefinite = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;

// Parses argv and dispatches to the subcommand. All output is deterministic
// for a fixed flag set; errors print to stderr and return kExitError.
int run_cli(int argc, const char* const* argv);

}  // namespace cwb
