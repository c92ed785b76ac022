#pragma once

#include <stdexcept>
#include <string>

namespace hypmetric {

/// Invalid argument: bad constant, wrong dimension, malformed parameter.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point is not in the open domain, or sits on (or numerically at) its boundary.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class UnsupportedDimensionError : public std::runtime_error {
 public:
  explicit UnsupportedDimensionError(const std::string& what) : std::runtime_error(what) {}
};

class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

class SearchError : public std::runtime_error {
 public:
  explicit SearchError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed domain or metric literal. `token()` is the offending piece of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace hypmetric
