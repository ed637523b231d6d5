/**
 * @file error.cpp
 * @brief Error code names.
 */

#include "musnet/error.h"

namespace musnet {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotATriad: return "NotATriad";
    case ErrorCode::NotInvertibleMultiplier: return "NotInvertibleMultiplier";
    case ErrorCode::UnknownDuration: return "UnknownDuration";
    case ErrorCode::NonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::BadCardinality: return "BadCardinality";
    case ErrorCode::NoSuchNode: return "NoSuchNode";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ScaffoldTooLarge: return "ScaffoldTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::UnknownScale: return "UnknownScale";
    case ErrorCode::NoteRange: return "NoteRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message), code_(code) {}

}  // namespace musnet
