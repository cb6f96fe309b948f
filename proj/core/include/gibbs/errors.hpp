#pragma once

#include <stdexcept>

namespace gibbs {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient or truncation index beyond what a series provides.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside the documented domain of a function.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a point where the quantity is singular.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation needs data the object does not carry (e.g. no closed form).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

class UndefinedRadiusError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration (unknown keys, empty ranges...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Too few usable data points for an envelope fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace gibbs
