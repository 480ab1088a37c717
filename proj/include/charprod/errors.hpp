#pragma once

#include <stdexcept>
#include <string>

namespace charprod {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnInteger : public Error { public: using Error::Error; };
class NotPrime : public Error { public: using Error::Error; };
class InvalidAction : public Error { public: using Error::Error; };
class EnumerationBoundExceeded : public Error { public: using Error::Error; };
class NotAbelian : public Error { public: using Error::Error; };
class GroupMismatch : public Error { public: using Error::Error; };
class NormalFormUnavailable : public Error { public: using Error::Error; };
class StabilizerViolation : public Error { public: using Error::Error; };
class IntegralityViolation : public Error { public: using Error::Error; };
class IncompleteIrrSet : public Error { public: using Error::Error; };
class NotIrreducible : public Error { public: using Error::Error; };
class ConstraintViolation : public Error { public: using Error::Error; };

}  // namespace charprod
