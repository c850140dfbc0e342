// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <string>

#include "baudscope/types.hpp"

namespace baudscope {

/// Raw IQ file format: header-less interleaved 32-bit little-endian IEEE-754
/// floats, I then Q per sample. The sample rate travels out-of-band.
void write_iq(const IqBuffer& buf, const std::string& path);

/// Parses a raw IQ file and attaches the given sample rate. Throws EmptyFile
/// for zero-length input, MalformedFile when the size is not a multiple of 8.
IqBuffer ingest_iq(const std::string& path, double sample_rate_hz);

}  // namespace baudscope
