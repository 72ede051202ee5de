#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kroc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySample : public Error {
 public:
  explicit EmptySample(std::size_t size);
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
};

class SingleClassSample : public Error {
 public:
  SingleClassSample(std::size_t n_target, std::size_t n_complement);
  std::size_t n_target() const { return n_target_; }
  std::size_t n_complement() const { return n_complement_; }

 private:
  std::size_t n_target_;
  std::size_t n_complement_;
};

class NonFiniteScore : public Error {
 public:
  explicit NonFiniteScore(std::size_t index);
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class DegeneratePrevalence : public Error {
 public:
  explicit DegeneratePrevalence(double prevalence);
};

class InsufficientFolds : public Error {
 public:
  explicit InsufficientFolds(std::size_t folds);
};

// Precondition violated by caller-supplied sizes or parameters.
class BoundsViolation : public Error {
 public:
  using Error::Error;
};

// Malformed textual input; line is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kroc
