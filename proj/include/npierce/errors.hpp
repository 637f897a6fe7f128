#pragma once

#include <stdexcept>
#include <string>

namespace npierce {

// Malformed input: bad indices, empty sets, inconsistent rotation systems.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// An exact solver or search ran past its configured cap or node budget.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace npierce
