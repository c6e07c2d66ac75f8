#ifndef HCUBE_CLI_HPP
#define HCUBE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hcube {

/// Exit codes: 0 success/verified, 2 property violated (witness in payload),
/// 3 budget exhausted, 64 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string output;       // stdout payload (JSON unless --raw/--tsv)
  std::string diagnostics;  // stderr text
};

CommandResult run_cli(const std::vector<std::string>& args,
                      std::istream* stdin_stream = nullptr);

}  // namespace hcube

#endif
