#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace freeprod {

enum class ErrorKind {
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  GeneratorsDoNotGenerate,
  OrderTooSmall,
  ForeignElement,
  NotASubgroup,
  TrivialSubgroup,
  TrivialPart,
  BadFactorIndex,
  MixedAmbient,
  DuplicateLabel,
  SyntaxError,
  UnknownGenerator,
  UnboundVariable,
  EmptyCandidates,
  EmptyWord,
  NotHyperbolic,
  UsageError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace freeprod
