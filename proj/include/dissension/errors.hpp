#pragma once

#include <stdexcept>
#include <string>

namespace dissension {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix fails the Hermiticity check; carries the max |M - M^dagger| entry.
class NotHermitian : public Error {
 public:
  NotHermitian(const std::string& what, double deviation) : Error(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

class NotAState : public Error {
 public:
  using Error::Error;
};

class InvalidParam : public Error {
 public:
  using Error::Error;
};

class BadSubset : public Error {
 public:
  using Error::Error;
};

class NotProjector : public Error {
 public:
  using Error::Error;
};

class NegativeArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace dissension

namespace dissension {

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dissension
