// src/waveform.cc

// Copyright 2026  The ttskit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ttskit/waveform.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "ttskit/error.h"

namespace ttskit {

Waveform::Waveform(std::vector<double> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ <= 0)
    Fail(ErrorKind::kInvalidRate,
         "sample rate must be positive, got " + std::to_string(sample_rate_));
  for (size_t i = 0; i < samples_.size(); i++) {
    if (!std::isfinite(samples_[i]))
      Fail(ErrorKind::kInvalidConfig,
           "non-finite sample at index " + std::to_string(i));
  }
}

double Waveform::Peak() const {
  double peak = 0.0;
  for (double s : samples_) peak = std::max(peak, std::abs(s));
  return peak;
}

namespace {

static_assert(std::endian::native == std::endian::little,
              "WAV I/O assumes a little-endian host");

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

template <typename T>
T ReadLe(const std::vector<char> &buf, size_t offset) {
  T v;
  std::memcpy(&v, buf.data() + offset, sizeof(T));
  return v;
}

template <typename T>
void PutLe(std::string *out, T v) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  out->append(bytes, sizeof(T));
}

}  // namespace

Waveform ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path);
  std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  auto bad = [&path](const std::string &what) {
    Fail(ErrorKind::kFormat, path + ": " + what);
  };
  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
      std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
    bad("not a RIFF/WAVE file");

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  size_t data_offset = 0, data_size = 0;
  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    uint32_t chunk_size = ReadLe<uint32_t>(buf, pos + 4);
    size_t body = pos + 8;
    if (std::memcmp(buf.data() + pos, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + 16 > buf.size()) bad("truncated fmt chunk");
      format = ReadLe<uint16_t>(buf, body);
      channels = ReadLe<uint16_t>(buf, body + 2);
      rate = ReadLe<uint32_t>(buf, body + 4);
      bits = ReadLe<uint16_t>(buf, body + 14);
      if (format == kFormatExtensible && chunk_size >= 40 &&
          body + 26 <= buf.size())
        format = ReadLe<uint16_t>(buf, body + 24);
      have_fmt = true;
    } else if (std::memcmp(buf.data() + pos, "data", 4) == 0) {
      data_offset = body;
      data_size = std::min<size_t>(chunk_size, buf.size() - body);
      break;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  if (!have_fmt) bad("missing fmt chunk");
  if (data_offset == 0) bad("missing data chunk");
  if (channels != 1)
    bad("expected mono audio, got " + std::to_string(channels) +
        " channels; downmix before processing");
  if (rate == 0 || rate > static_cast<uint32_t>(INT32_MAX)) bad("bad sample rate");

  std::vector<double> samples;
  if (format == kFormatPcm && bits == 16) {
    size_t n = data_size / 2;
    samples.resize(n);
    for (size_t i = 0; i < n; i++)
      samples[i] = ReadLe<int16_t>(buf, data_offset + 2 * i) / 32768.0;
  } else if (format == kFormatFloat && bits == 32) {
    size_t n = data_size / 4;
    samples.resize(n);
    for (size_t i = 0; i < n; i++) {
      float f = ReadLe<float>(buf, data_offset + 4 * i);
      if (!std::isfinite(f)) bad("non-finite float sample");
      samples[i] = f;
    }
  } else {
    bad("unsupported encoding (format " + std::to_string(format) + ", " +
        std::to_string(bits) + " bits); need 16-bit PCM or 32-bit float");
  }
  return Waveform(std::move(samples), static_cast<int>(rate));
}

void WriteWav(const std::string &path, const Waveform &wave) {
  const uint32_t data_bytes = static_cast<uint32_t>(wave.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  PutLe<uint32_t>(&out, 36 + data_bytes);
  out.append("WAVEfmt ");
  PutLe<uint32_t>(&out, 16);
  PutLe<uint16_t>(&out, kFormatPcm);
  PutLe<uint16_t>(&out, 1);
  PutLe<uint32_t>(&out, static_cast<uint32_t>(wave.sample_rate()));
  PutLe<uint32_t>(&out, static_cast<uint32_t>(wave.sample_rate()) * 2);
  PutLe<uint16_t>(&out, 2);
  PutLe<uint16_t>(&out, 16);
  out.append("data");
  PutLe<uint32_t>(&out, data_bytes);
  for (double s : wave.samples()) {
    double scaled = std::clamp(std::round(s * 32768.0), -32768.0, 32767.0);
    PutLe<int16_t>(&out, static_cast<int16_t>(scaled));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) Fail(ErrorKind::kIo, "cannot write " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) Fail(ErrorKind::kIo, "write failed for " + path);
}

}  // namespace ttskit
