#pragma once

#include <stdexcept>
#include <string>

namespace twistrace {

// Base for every failure raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DescriptorError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

// A floating computation produced a value outside its tolerance contract
// (orthogonality residual, non-integral degree, disagreeing coefficient paths, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistrace
