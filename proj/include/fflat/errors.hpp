#pragma once

#include <stdexcept>
#include <string>

namespace fflat {

/// Rejected input: malformed model, inconsistent dimensions, bad selector.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured work cap (enumeration count, backtracking nodes, field size) was hit.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fflat
