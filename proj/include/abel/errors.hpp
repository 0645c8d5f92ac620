#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abel {

enum class ErrorKind {
  NotSquare,
  TooFewVertices,
  TooManyVertices,
  AsymmetricMatrix,
  BadDiagonal,
  NegativeMultiplicity,
  Loop,
  Disconnected,
  EmptyOrFullSubset,
  BadIndex,
  DegreeMismatch,
  NonzeroDegree,
  NonTermination,
  InvalidChoice,
  InvalidSequence,
  Unsolvable,
  BadRational,
  BadDocument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind names the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace abel
