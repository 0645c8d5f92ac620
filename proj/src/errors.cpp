#include "abel/errors.hpp"

namespace abel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::Loop: return "Loop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyOrFullSubset: return "EmptyOrFullSubset";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NonzeroDegree: return "NonzeroDegree";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::InvalidChoice: return "InvalidChoice";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::BadRational: return "BadRational";
    case ErrorKind::BadDocument: return "BadDocument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace abel
