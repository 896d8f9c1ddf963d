#pragma once

#include <stdexcept>
#include <string>

namespace pendant_lab {

// Base of every exception the library throws. The CLI maps all of these to
// exit status 2 and prints `what()`.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated (edge already present, stale
// appearance, label collision, malformed rooted graph, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// A size cap (vertex cap, enumeration cap) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownClass : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pendant_lab
