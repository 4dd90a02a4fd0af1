#ifndef HYBRID_ERRORS_HPP
#define HYBRID_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hybrid/ids.hpp"

namespace hybrid {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A DbTerm with dangling indices was offered where a proper term is needed.
class NotProper : public Error {
 public:
  using Error::Error;
};

// Raised when code inspects a term that still carries the opaque argument
// of a binding session. The session that owns `probe()` turns this into
// "not a syntactic function"; every other session lets it pass through.
class ExoticUse : public Error {
 public:
  explicit ExoticUse(ProbeId probe)
      : Error("inspection of a bound-variable placeholder (probe " +
              std::to_string(probe.value) + ")"),
        probe_(probe) {}

  ProbeId probe() const noexcept { return probe_; }

 private:
  ProbeId probe_;
};

class ExoticFunction : public Error {
 public:
  using Error::Error;
};

class PremiseViolated : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotInImage : public Error {
 public:
  using Error::Error;
};

class NotAnAbstraction : public Error {
 public:
  using Error::Error;
};

}  // namespace hybrid

#endif  // HYBRID_ERRORS_HPP
