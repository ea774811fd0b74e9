#pragma once

#include <stdexcept>
#include <string>

namespace friendship {

// Caller handed us something malformed (bad parameters, invalid edge list).
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Text that should have been a valid .hg document was not.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested object provably does not exist for these parameters
// (e.g. a Steiner triple system on n = 8 points).
struct UnavailableError : std::runtime_error {
  explicit UnavailableError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem trouble.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A self-check that can only fail on a bug in this library fired.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace friendship
