#pragma once

#include <cstdint>
#include <stdexcept>

namespace spinsurg {

// A caller violated a documented mathematical precondition (matrix not
// symmetric, spin vector not characteristic, group mismatch, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation would have to enumerate a set beyond the desk-scale cap.
class size_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed.  Always a bug, never user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parsing of an input file or a value string failed.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Groups (and solution sets) above this order are never enumerated
// element by element; operations that would need to throw size_cap_error.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 16;

// Default ceiling for brute-force isomorphism searches (group order).
inline constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 12;

}  // namespace spinsurg
