#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hosmt::cli {

/// Exit codes of the `hosmt` tool.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,  // parse, sort or usage error
  kIoError = 2,
  kDivergence = 3,
  kInvalidProof = 4,
  kTrustedProof = 5,
};

struct Result {
  int code = kOk;
  std::string out;
  std::string err;
};

/// Runs the tool on `args` (without the program name). `stdin_text` stands in
/// for standard input when a file argument is `-`.
Result run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace hosmt::cli
