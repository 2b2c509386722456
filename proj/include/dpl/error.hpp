// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace dpl {

enum class ErrorCode {
  Domain,
  Parse,
  WrongMultiplicity,
  BadSignPattern,
  NoBlockDecomposition,
  RollMismatch,
  NotSimple,
  SubsetTooSmall,
  UnknownIndex,
  GenusNotOne,
  TooFewIndices,
  NotTotal,
  NotTransitive,
  BlockInconsistent,
  NoArrangement,
  IllegalLocus,
  ResourceLimit,
  MalformedWord,
  UnknownFixture,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::WrongMultiplicity: return "WrongMultiplicity";
    case ErrorCode::BadSignPattern: return "BadSignPattern";
    case ErrorCode::NoBlockDecomposition: return "NoBlockDecomposition";
    case ErrorCode::RollMismatch: return "RollMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::GenusNotOne: return "GenusNotOne";
    case ErrorCode::TooFewIndices: return "TooFewIndices";
    case ErrorCode::NotTotal: return "NotTotal";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::BlockInconsistent: return "BlockInconsistent";
    case ErrorCode::NoArrangement: return "NoArrangement";
    case ErrorCode::IllegalLocus: return "IllegalLocus";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpl
