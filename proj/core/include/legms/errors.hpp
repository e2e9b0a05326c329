#pragma once

#include <stdexcept>
#include <string>

namespace legms {

/// Caller violated a documented precondition (maps to CLI exit code 2).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independently computed routes disagreed.  This always signals an
/// implementation bug, never bad input (maps to CLI exit code 3).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace legms
