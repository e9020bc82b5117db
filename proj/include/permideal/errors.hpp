#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permideal {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAxis : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotConnected : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Raised when an operation needs a t-signed set; the message carries the witness.
class NotSigned : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace permideal
