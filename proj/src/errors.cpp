#include "veronese/errors.hpp"

namespace veronese {

const char* kindName(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Structure: return "structure";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Range: return "range";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::Domain: return "domain";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace veronese
