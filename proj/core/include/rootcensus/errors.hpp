#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootcensus {

/// Rejected Cartan type string or inadmissible (family, rank) pair.
/// Where the rejected pair is isomorphic to an admissible type, the message
/// names it (for example C2 -> B2).
class InvalidTypeError : public std::invalid_argument {
public:
  explicit InvalidTypeError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal cross-check failed (non-integral formula value, exponent
/// duality violated, ...). Signals a bug or corrupted input, never a
/// recoverable user error.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// An enumeration or group-generation cap was exceeded. `required()` reports
/// the cap value that would have been needed, when it is known.
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string& what, std::uint64_t required = 0)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

private:
  std::uint64_t required_;
};

} // namespace rootcensus
