#pragma once

#include <stdexcept>
#include <string>

namespace delta_atom {

// Every failure raised by the library derives from Error. The category decides
// the CLI exit code: validation -> 1, numeric -> 2, io -> 3.
enum class ErrorCategory { validation, numeric, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorCategory::numeric, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

// Bad truncation or dimension arguments (fock_dim < 2, shape mismatch).
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Operator expected to be Hermitian is not; defect() is max|M - M^dag|.
class HermiticityError : public NumericError {
 public:
  HermiticityError(const std::string& what, double defect)
      : NumericError(what), defect_(defect) {}
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

// Fock space too small for the requested state or trajectory.
class TruncationError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Coupled degenerate levels in a second-order elimination.
class DegeneracyError : public NumericError {
 public:
  DegeneracyError(const std::string& what, long m, long n)
      : NumericError(what), m_(m), n_(n) {}
  long row() const noexcept { return m_; }
  long col() const noexcept { return n_; }

 private:
  long m_;
  long n_;
};

// An eliminated level is resonant with a dressed level (Delta_+ or Delta_- = 0).
class ResonanceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Process exit code: validation 1, numeric 2, io 3.
inline int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::validation: return 1;
    case ErrorCategory::numeric: return 2;
    case ErrorCategory::io: return 3;
  }
  return 2;
}

}  // namespace delta_atom
