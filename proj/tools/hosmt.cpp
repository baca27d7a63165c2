#include <algorithm>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "hosmt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  if (std::find(args.begin(), args.end(), "-") != args.end()) {
    input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  auto result = hosmt::cli::run(args, input);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
