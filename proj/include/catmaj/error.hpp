#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catmaj {

enum class ErrorCode {
  LengthMismatch,
  EmptyVector,
  NegativeEntry,
  MixedScalarKind,
  NonIntegerEntries,
  ZeroPolynomial,
  NotPositiveOnPositiveAxis,
  DuplicateNodes,
  EntriesNotAboveOne,
  ZeroEntry,
  MomentConditionFailed,
  ZeroEntryWithNonpositiveNu,
  XHasZeroEntry,
  NotTrumpedAfterSnap,
  DivisionNotExact,
  PolyaSearchExhausted,
  EqualVectors,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catmaj
