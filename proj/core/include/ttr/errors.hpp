#pragma once

#include <stdexcept>
#include <string>

namespace ttr {

// Thrown when a request exceeds the configured enumeration/size guard.
// Maps to CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ttr
