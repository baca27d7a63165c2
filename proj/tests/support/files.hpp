#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hosmt::testing {

inline std::string test_path(const std::string& rel) { return std::string(HOSMT_TEST_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_test_file(const std::string& rel) { return read_file(test_path(rel)); }

}  // namespace hosmt::testing
