#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sobolev {

/// Broad classification used by front ends to map failures onto exit codes.
enum class ErrorCategory { Input, Solver };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Input-side failures.

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(ErrorCategory::Input,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCategory::Input, what) {}
};

class UnsupportedWeight : public Error {
 public:
  explicit UnsupportedWeight(const std::string& what) : Error(ErrorCategory::Input, what) {}
};

class ZeroWeight : public Error {
 public:
  explicit ZeroWeight(const std::string& what) : Error(ErrorCategory::Input, what) {}
};

// Computational failures.

class ModeMismatch : public Error {
 public:
  explicit ModeMismatch(const std::string& what) : Error(ErrorCategory::Solver, what) {}
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error(ErrorCategory::Solver, what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(ErrorCategory::Solver, what) {}
};

class IllConditioned : public Error {
 public:
  explicit IllConditioned(const std::string& what) : Error(ErrorCategory::Solver, what) {}
};

class BoundaryResidualExceeded : public Error {
 public:
  BoundaryResidualExceeded(const std::string& what, double residual)
      : Error(ErrorCategory::Solver, what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class ClosedFormMismatch : public Error {
 public:
  explicit ClosedFormMismatch(const std::string& what) : Error(ErrorCategory::Solver, what) {}
};

class PositivityViolated : public Error {
 public:
  PositivityViolated(const std::string& what, double point)
      : Error(ErrorCategory::Solver, what + " near x = " + std::to_string(point)),
        point_(point) {}
  double point() const noexcept { return point_; }

 private:
  double point_;
};

}  // namespace sobolev
