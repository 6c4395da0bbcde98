#pragma once

#include <stdexcept>
#include <string>

namespace comtrans {

// Base of every error raised by the library. The C API maps each subclass
// to a status code (see comtrans.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad partition string, unknown operation tag, bad slot...
class UsageError : public Error {
 public:
  using Error::Error;
};

// Computation refused because it is outside desk scale.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Gröbner completion or basis enumeration ran past its degree cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A prime divides a denominator, so reduction mod p is undefined.
class PrimeUnusable : public Error {
 public:
  using Error::Error;
};

}  // namespace comtrans
