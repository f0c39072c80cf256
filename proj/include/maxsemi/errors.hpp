#pragma once

#include <stdexcept>

namespace maxsemi {

// An argument lies outside an operation's domain (branch support, parameter
// range, grid shape, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// F(x)/F(cx) is not a valid distribution function for the requested scale c.
class InvalidCofactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configuration record failed validation on load.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxsemi
