#pragma once

#include <stdexcept>
#include <string>

namespace profin {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad tables, non-permutations, malformed JSON specs.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A structural precondition failed (subgroup not normal, set not an ideal, ...).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded. Callers may catch this and fall back
/// to a cheaper strategy; nothing is ever sampled silently.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_cap, std::size_t limit, std::size_t requested)
      : Error(what_cap + " cap exceeded: limit " + std::to_string(limit) +
              ", requested " + std::to_string(requested)),
        cap_(std::move(what_cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const { return cap_; }
  std::size_t limit() const { return limit_; }
  std::size_t requested() const { return requested_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t requested_;
};

}  // namespace profin
