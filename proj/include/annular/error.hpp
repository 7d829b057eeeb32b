#pragma once

#include <stdexcept>
#include <string>

namespace annular {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjacent words or generators disagree on a boundary size.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

/// A generator index or size is outside its legal range.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A rewrite rule's left-hand side does not occur at the requested position.
class NoMatch : public Error {
 public:
  using Error::Error;
};

/// Malformed tangle-word text, sign string or JSON payload.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a crossingless cup/rotation word got something else.
class NotCrossingless : public Error {
 public:
  using Error::Error;
};

/// Two polylines touch; the routing is supposed to make this impossible.
class GeometryDegenerate : public Error {
 public:
  using Error::Error;
};

/// Algebra elements over different (m, n).
class MixedContext : public Error {
 public:
  using Error::Error;
};

/// Two admissible surgery orders produced different products.
class ConjectureViolation : public Error {
 public:
  using Error::Error;
};

/// A surgery configuration for which no rule is defined (line meeting a 0-circle).
class RuleGap : public Error {
 public:
  using Error::Error;
};

/// Something that is true by construction turned out false.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace annular
