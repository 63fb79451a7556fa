#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tdr::cli {

struct InputDigest {
  std::string path;
  std::string fnv1a;  // 16 hex digits
};

struct CommandReport {
  std::string command;
  std::vector<InputDigest> inputs;
  nlohmann::json result;
  int exit_code = 0;  // 0 ok, 1 invalid input, 2 unsupported on wild diagrams
  std::string out;    // text for stdout
  std::string err;    // text for stderr
};

/// Dispatches one command; args exclude the program name. Never throws.
CommandReport run(const std::vector<std::string>& args);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace tdr::cli
