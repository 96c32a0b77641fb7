#pragma once

#include <stdexcept>
#include <string>

namespace salemforge {

// Caller supplied input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal cross-check failed: two routes disagree, a certificate does not
// verify, or an identity that must hold exactly does not.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Numerics could not decide at the requested precision. Carries the
// precision (in bits) that the caller should retry with.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long suggested_bits)
      : std::runtime_error(what), suggested_bits_(suggested_bits) {}
  long suggested_bits() const noexcept { return suggested_bits_; }

 private:
  long suggested_bits_;
};

class NotMonicError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotSalemError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PoleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NoSiegelRootError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class DegreeCertificateFailure : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class WitnessFailure : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class IndependenceFalsified : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

class FanError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace salemforge
