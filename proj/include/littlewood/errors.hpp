#pragma once

#include <stdexcept>
#include <string>

namespace littlewood {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument values (out-of-range sizes, malformed input).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A lemma or theorem hypothesis does not hold for the given input.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string condition, const std::string& detail)
      : Error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Grid too coarse for the polynomial's frequency support.
class AliasingError : public Error {
 public:
  using Error::Error;
};

/// Requested computation exceeds the configured memory budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, long double needed_bytes)
      : Error(what), needed_bytes_(needed_bytes) {}

  long double needed_bytes() const noexcept { return needed_bytes_; }

 private:
  long double needed_bytes_;
};

/// 64-bit frequency arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace littlewood
