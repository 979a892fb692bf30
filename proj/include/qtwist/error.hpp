#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtwist {

enum class ErrorKind {
  argument,          // malformed or out-of-domain argument
  division_by_zero,  // q = 1 without the limit branch, zero denominators
  branch_ambiguity,  // real power of a non-positive-real base
  pole,              // 1 + w q^l = 0 and friends
  divergence,        // series requested outside its region of convergence
  singular,          // formal series with zero constant term
  method,            // evaluation method unsuitable for the input
  non_convergence,   // iteration cap reached before the tolerance
  precondition,      // standing hypotheses of a module are violated
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when 1 + w q^l (or an analogous factor) vanishes; carries the index.
class PoleError : public Error {
 public:
  PoleError(long index, const std::string& message)
      : Error(ErrorKind::pole, message), index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace qtwist
