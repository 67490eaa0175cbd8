#pragma once

#include <stdexcept>
#include <string>

namespace ringbethe {

// Error categories; numeric values line up with the C API status codes and the
// CLI exit codes (2 = bad input, 3 = numerical failure).
enum class errc {
  invalid_params = 2,
  no_convergence = 3,
  unsupported = 4,
  pole = 5,
  evaluation = 6,
  too_large = 7,
};

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void require(bool cond, errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace ringbethe
