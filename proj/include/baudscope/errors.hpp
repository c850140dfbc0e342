// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <stdexcept>
#include <string>

namespace baudscope {

/// Error taxonomy shared by every module. Each failure mode carries a stable
/// code so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  enum class Code {
    OversamplingTooLow,
    BadRolloff,
    BadOrder,
    BadConfig,
    ResamplingOverflow,
    BufferTooShort,
    NotEnoughCrossings,
    NoRootInBracket,
    DegenerateAcf,
    DegenerateSlope,
    EmptyInput,
    MalformedFile,
    EmptyFile,
  };

  Error(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

const char* to_string(Error::Code code);

}  // namespace baudscope
