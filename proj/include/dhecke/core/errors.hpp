#pragma once

#include <stdexcept>
#include <string>

namespace dhecke {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claimed generator of a finite field's multiplicative group is not one.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// p does not divide q - 1, so no character of order p exists.
class CharacterUndefined : public Error {
 public:
  using Error::Error;
};

/// The rational prime divides disc(min_poly); excluded from all scans.
class RamifiedOrIndexPrime : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// E(N) contains p-torsion; the cohomology model is not set up for it.
class TorsionObstruction : public Error {
 public:
  using Error::Error;
};

/// A principal-ideal search hit its bound without a decision.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dhecke
