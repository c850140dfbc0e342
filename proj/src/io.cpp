// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace baudscope {

void write_iq(const IqBuffer& buf, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(Error::Code::MalformedFile, "cannot open " + path + " for writing");
  }
  std::vector<float> raw(std::size_t(buf.samples.size()) * 2);
  for (Eigen::Index i = 0; i < buf.samples.size(); ++i) {
    raw[2 * std::size_t(i)] = float(buf.samples[i].real());
    raw[2 * std::size_t(i) + 1] = float(buf.samples[i].imag());
  }
  out.write(reinterpret_cast<const char*>(raw.data()),
            std::streamsize(raw.size() * sizeof(float)));
  if (!out) {
    throw Error(Error::Code::MalformedFile, "short write to " + path);
  }
}

IqBuffer ingest_iq(const std::string& path, double sample_rate_hz) {
  if (!(sample_rate_hz > 0.0)) {
    throw Error(Error::Code::BadConfig, "sample rate must be positive");
  }
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) {
    throw Error(Error::Code::MalformedFile, "cannot open " + path);
  }
  const std::streamoff size = in.tellg();
  if (size == 0) {
    throw Error(Error::Code::EmptyFile, path + " is empty");
  }
  if (size % 8 != 0) {
    throw Error(Error::Code::MalformedFile,
                path + " size is not a multiple of 8 bytes (float32 I/Q pairs)");
  }
  in.seekg(0);
  std::vector<float> raw(std::size_t(size) / sizeof(float));
  in.read(reinterpret_cast<char*>(raw.data()), size);
  if (!in) {
    throw Error(Error::Code::MalformedFile, "short read from " + path);
  }

  IqBuffer buf;
  buf.sample_rate_hz = sample_rate_hz;
  buf.samples.resize(Eigen::Index(raw.size() / 2));
  for (Eigen::Index i = 0; i < buf.samples.size(); ++i) {
    buf.samples[i] = std::complex<double>(raw[2 * std::size_t(i)],
                                          raw[2 * std::size_t(i) + 1]);
  }
  return buf;
}

}  // namespace baudscope
