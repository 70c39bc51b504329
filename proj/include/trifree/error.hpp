#pragma once

#include <stdexcept>
#include <string>

namespace trifree {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  io_error,
  not_triangle_free,
  round_cap_exceeded,
  out_of_range,
  incomplete_coloring,
};

/// Library error carrying a stable code for the C boundary.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trifree
