#ifndef GTRANS_ERROR_HPP
#define GTRANS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gtrans {

enum class Status {
  Ok = 0,
  InvalidArgument,   // bad sizes, out-of-range indices, malformed specs
  ParseError,        // malformed input text (message carries the position)
  Precondition,      // a documented precondition does not hold
  BudgetExceeded,    // a search budget limit was hit where completion is required
  NoConvergence,     // iterative solver failed to converge
  IoError,           // file could not be read or written
};

const char* status_name(Status s);

// Library errors carry a status code so the C layer can map them 1:1.
class Error : public std::runtime_error {
public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  Status status() const { return status_; }

private:
  Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& message) {
  throw Error(s, message);
}

}  // namespace gtrans

#endif
