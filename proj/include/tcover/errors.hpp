#pragma once

#include <stdexcept>
#include <string>

namespace tcover {

/// Input exceeds a materialization or enumeration limit.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// r > d: the upset is empty and there is no p with w(g,p) = 1.
class EmptyUpset : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tcover
