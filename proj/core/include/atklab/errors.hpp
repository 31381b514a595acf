#pragma once

#include <stdexcept>
#include <string>

namespace atklab {

/// Violated precondition or shape/domain contract. The CLI maps this to exit 1.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// Training or attack diverged (non-finite or exploding loss). CLI exit 2.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Persistence failure: bad magic, version, CRC, malformed config, PNG error.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace atklab
