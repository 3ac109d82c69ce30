#pragma once

#include <stdexcept>
#include <string>

namespace gakit {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input shape: dimension mismatch, malformed index list, non-unit vector.
class ArgumentError : public Error {
public:
  using Error::Error;
};

// A metric (or a value treated as one) with an eigenvalue or determinant too close to zero.
class DegeneracyError : public Error {
public:
  DegeneracyError(const std::string& what, double offending_value)
      : Error(what), value_(offending_value) {}
  double value() const noexcept { return value_; }

private:
  double value_;
};

class SingularityError : public Error {
public:
  SingularityError(const std::string& what, double det) : Error(what), det_(det) {}
  double determinant() const noexcept { return det_; }

private:
  double det_;
};

class SignatureError : public Error {
public:
  using Error::Error;
};

class NumericError : public Error {
public:
  using Error::Error;
};

} // namespace gakit
