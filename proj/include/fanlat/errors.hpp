#pragma once

#include <stdexcept>
#include <string>

namespace fanlat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or matrix shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input that does not describe a valid rational fan, or an operation applied
// to a fan outside its domain (non-complete, non-simplicial, unknown cone).
class FanError : public Error {
 public:
  using Error::Error;
};

// A vector claimed to lie in the relation lattice does not.
class NotARelation : public Error {
 public:
  using Error::Error;
};

// A relation of a complete fan outside the lattice generated by relations
// supported on ray stars. This happens on some fans with non-unimodular
// cones, where star relations only generate a finite-index sublattice.
class NotLocallyGenerated : public Error {
 public:
  using Error::Error;
};

// Malformed fan or report files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed (e.g. the local decomposition could not route
// a defect on a complete fan). Indicates a bug rather than bad input.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace fanlat
