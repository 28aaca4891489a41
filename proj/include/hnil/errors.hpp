#pragma once

#include <stdexcept>
#include <string>

namespace hnil {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needed a degree the truncated model does not represent.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Elements or generators from different signatures were mixed, or a name is unknown.
class SignatureError : public Error {
 public:
  using Error::Error;
};

class NotACocycleError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant that should hold by construction was found broken.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A model failed validation; the message lists the violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hnil
