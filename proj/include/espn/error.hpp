#pragma once

#include <stdexcept>
#include <string>

namespace espn {

/// Base class for every error the engine reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller passed an argument that violates an operation's precondition.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Operation called in the wrong order (e.g. finishing an unfinished scan).
struct InvalidStateError : Error {
  using Error::Error;
};

/// Configuration that can never work (e.g. direct I/O on an unaligned store).
struct InvalidConfigError : Error {
  using Error::Error;
};

/// On-disk artifact does not parse or fails validation.
struct FormatError : Error {
  using Error::Error;
};

/// Operating system I/O failure.
struct IoError : Error {
  using Error::Error;
};

/// Artifacts disagree with each other (e.g. store missing an indexed doc).
struct DataIntegrityError : Error {
  using Error::Error;
};

}  // namespace espn
