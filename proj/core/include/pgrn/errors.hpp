#pragma once

#include <stdexcept>
#include <string>

namespace pgrn {

/// Process exit codes used by the CLI. Library errors carry the code they
/// should map to so main() can translate uniformly.
enum class ExitCode : int {
  ok = 0,
  usage = 2,      // invalid flags or configuration values
  format = 3,     // corrupt or mis-typed input file
  capacity = 4,   // request exceeds a hard implementation cap
  tolerance = 5,  // a verification command found its tolerance violated
  io = 6,         // filesystem failure
  data = 7,       // degenerate or unusable data (e.g. constant series)
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error(ExitCode::usage, w) {}
};
struct FormatError : Error {
  explicit FormatError(const std::string& w) : Error(ExitCode::format, w) {}
};
struct CapacityError : Error {
  explicit CapacityError(const std::string& w) : Error(ExitCode::capacity, w) {}
};
struct ToleranceError : Error {
  explicit ToleranceError(const std::string& w) : Error(ExitCode::tolerance, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ExitCode::io, w) {}
};
struct ShapeError : Error {
  explicit ShapeError(const std::string& w) : Error(ExitCode::usage, w) {}
};
struct DegenerateDataError : Error {
  explicit DegenerateDataError(const std::string& w) : Error(ExitCode::data, w) {}
};

}  // namespace pgrn
