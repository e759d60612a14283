#pragma once

#include <stdexcept>
#include <string>

namespace funk {

// Thrown when an operator is handed input outside its documented domain
// (odd content where evenness is required, non-convex support data, bad
// parameter ranges).  The CLI maps this to exit code 3.
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed files, specs or config values.  CLI exit code 2.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace funk
