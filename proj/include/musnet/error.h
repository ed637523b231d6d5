/**
 * @file error.h
 * @brief Error codes and the exception type thrown by every module.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace musnet {

enum class ErrorCode {
  EmptySet,
  DimensionMismatch,
  NotATriad,
  NotInvertibleMultiplier,
  UnknownDuration,
  NonPositiveDuration,
  BadCardinality,
  NoSuchNode,
  EmptySequence,
  Disconnected,
  ScaffoldTooLarge,
  ParseError,
  EmptySeries,
  UnknownScale,
  NoteRange,
  InvalidArgument,
  Io,
};

/// Stable identifier for an error code, e.g. "DimensionMismatch".
std::string_view errorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace musnet
