#pragma once

#include <stdexcept>
#include <string>

namespace anyon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A required F, R or A block is absent from the category data.
class DataIncomplete : public Error {
 public:
  using Error::Error;
};

// Well-formed input that this library deliberately does not handle.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace anyon
