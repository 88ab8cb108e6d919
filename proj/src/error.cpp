#include "freeprod/error.hpp"

namespace freeprod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::GeneratorsDoNotGenerate: return "GeneratorsDoNotGenerate";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorKind::TrivialPart: return "TrivialPart";
    case ErrorKind::BadFactorIndex: return "BadFactorIndex";
    case ErrorKind::MixedAmbient: return "MixedAmbient";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::EmptyCandidates: return "EmptyCandidates";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace freeprod
