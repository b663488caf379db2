#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace pgsem::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLinguistic = 1;  // ungrammatical, demo mismatch
inline constexpr int kExitInput = 2;       // bad flags, files, lexicons

// Runs `pgsem <subcommand> ...`; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace pgsem::cli
