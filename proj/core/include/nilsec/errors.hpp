#pragma once

#include <stdexcept>
#include <string>

namespace nilsec {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Lie type outside its admissible rank range, or an unknown series.
class InvalidTypeError : public Error {
 public:
  using Error::Error;
};

/// Partition total does not match the size the operation requires.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A Dynkin mark outside {0,1,2}, or a marks vector of the wrong length.
class InvalidMarksError : public Error {
 public:
  using Error::Error;
};

/// Linearly dependent input where an independent family is required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this input (e.g. exceptional closure order).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Textual input that does not follow the documented grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree, or bundled data is inconsistent.
/// The message names the identity that failed.
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// A data file is missing, malformed, or fails validation at load time.
class DataLoadError : public Error {
 public:
  using Error::Error;
};

}  // namespace nilsec
