#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace admintm::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kSchemaError = 2,
  kInternalError = 3,
};

struct Terminal {
  bool color = false;  // ANSI styling for interactive prompts only
};

// Runs one admin-tm invocation. `args` excludes the program name. Result
// data goes to `out`, diagnostics and wizard prompts to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        Terminal terminal = {});

}  // namespace admintm::cli
