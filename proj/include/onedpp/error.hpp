#pragma once

#include <stdexcept>
#include <string>

namespace onedpp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of matrices or series do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A series has no nonzero coefficient inside its known range.
class SingularSeriesError : public Error {
 public:
  using Error::Error;
};

// A coefficient beyond the declared truncation order was requested.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A process specification produced a negative pattern probability or
// violates its structural constraints.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class IncompleteSpecError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// Group / subgroup / representative data that is not a central extension.
class SetupError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace onedpp
