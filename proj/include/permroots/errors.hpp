#pragma once

#include <stdexcept>
#include <string>

namespace permroots {

/// Malformed textual input (permutation, cycle type, range).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request exceeds a configured size cap (oracle bound, enumeration limit, truncation order).
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check inside the library failed. Always a bug, never a data condition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace permroots
