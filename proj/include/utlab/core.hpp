#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace utlab {

/// A point of the domain {1, ..., n}. Points are 1-based everywhere in the
/// public API; index 0 is never a valid point.
using Point = std::uint16_t;

using BigInt = boost::multiprecision::cpp_int;

/// Every decider accepts degrees up to this bound.
inline constexpr std::size_t kMaxDegree = 512;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An explicit size budget (orbit cap, frontier cap, closure cap) was hit.
/// Callers never receive a truncated answer; they receive this instead.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_size_(partial) {}
  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  std::size_t partial_size_;
};

}  // namespace utlab
