#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twkit {

enum class ErrorKind {
  // tricore
  AlreadyGlued,
  PermFacetMismatch,
  SelfIdentity,
  MalformedSpec,
  RepeatedLabel,
  InvalidComplex,
  ClosedManifold,
  PreconditionViolated,
  NotClosed,
  IndexOutOfRange,
  ParseError,
  // graphalg
  TooLarge,
  NotFourRegular,
  // blocks
  InvalidTriple,
  NotBoundaryEdge,
  EdgeOnBoundaryOfSurface,
  BadR,
  BadGenus,
  // assemble
  InvalidSpec,
  NotCoprime,
  NotATree,
  SiteExhausted,
  NonSimplicialClosure,
  BadFlipIndex,
  BadK,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twkit
