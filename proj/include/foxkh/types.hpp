#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace foxkh {

// Exact arbitrary-precision integer scalar. Crossing-matrix determinants and
// Bareiss intermediates grow with the crossing number; a fixed-width integer
// would silently corrupt primality verdicts.
using Int = boost::multiprecision::cpp_int;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

enum class Errc {
  // notation parsing
  MalformedToken,
  LabelCountMismatch,
  EmptyInput,
  NoUnderPass,
  NotEven,
  DuplicateMagnitude,
  WrongRange,
  MixedSigns,
  // diagram preconditions
  NotAlternating,
  // linear algebra
  NotSquare,
  NotPrime,
  Singular,
  TooSmall,
  SingularMinor,
  NotInKernel,
  NotPrimeDeterminant,
  DegeneratePair,
  LengthMismatch,
  TooLarge,
  // eulerian analysis
  NoHEdge,
  InvariantViolated,
  // corpus I/O
  IoError,
  ParseError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace foxkh
