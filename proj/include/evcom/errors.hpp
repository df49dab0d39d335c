#pragma once

#include <stdexcept>
#include <string>

namespace evcom {

/// Malformed user input: bad permutation notation, size mismatch, q = 0.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was hit (enumeration cap, oracle node cap).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evcom
