#pragma once

#include <stdexcept>
#include <string>

namespace dwm {

/// Input that violates a documented precondition (zero field, bad sign flag, ...).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters that are well-formed but fall outside the physical solution
/// domain: complex roots, negative h², singular envelope tilt.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quadrature or fit results that fail their own consistency checks.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw validation_error(what);
}

}  // namespace detail
}  // namespace dwm
