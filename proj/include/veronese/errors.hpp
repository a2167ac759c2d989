#pragma once

#include <stdexcept>
#include <string>

namespace veronese {

enum class ErrorKind {
  Structure,  // operands built over different block structures
  Parameter,  // malformed or out-of-hypothesis parameters
  Range,      // a closed form asked outside the range where it is stated
  Guard,      // an enumeration would exceed its configured cap
  Domain,     // operation undefined for this input (e.g. unsortable set)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* kindName(ErrorKind kind) noexcept;

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace veronese
