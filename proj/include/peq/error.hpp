#pragma once

#include <stdexcept>
#include <string>

namespace peq {

// Malformed input: bad ranges, shape mismatches, non-canonical encodings.
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A partition with more than n blocks cannot index the basis at base
// dimension n.
class BasisIndexError : public DomainError {
  public:
    explicit BasisIndexError(const std::string& what) : DomainError(what) {}
};

// The requested computation would materialize more entries than the
// configured budget allows.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit integer arithmetic left the representable range.
class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace peq
