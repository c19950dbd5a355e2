#pragma once

#include <stdexcept>
#include <string>

namespace hspec {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid tensor or polynomial construction (bad index, duplicate orbit, bad degree).
class construction_error : public error {
 public:
  using error::error;
};

/// A bound parameter (k, l) outside the range for which the inequality is stated.
class parameter_error : public error {
 public:
  using error::error;
};

/// Nonpositive trace or determinant handed to an AM-GM bound.
class hypothesis_error : public error {
 public:
  using error::error;
};

/// Requested computation is not available for this (order, dimension).
class unsupported_error : public error {
 public:
  using error::error;
};

/// Characteristic polynomial interpolation failed its residual check.
class conditioning_error : public error {
 public:
  using error::error;
};

/// Malformed tensor document; carries the 1-based line number.
class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Well-formed document whose contents violate tensor invariants.
class validation_error : public error {
 public:
  using error::error;
};

}  // namespace hspec
