#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "avsep/signal/waveform.hpp"

namespace avsep::signal {
namespace {

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

template <typename T>
T read_le(std::istream& in) {
  unsigned char b[sizeof(T)];
  in.read(reinterpret_cast<char*>(b), sizeof(T));
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(b[i]) << (8 * i);
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  unsigned char b[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), sizeof(T));
}

float u32_to_float(std::uint32_t u) {
  float f;
  std::memcpy(&f, &u, 4);
  return f;
}

std::uint32_t float_to_u32(float f) {
  std::uint32_t u;
  std::memcpy(&u, &f, 4);
  return u;
}

}  // namespace

MultiWaveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_wav: cannot open " + path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::strncmp(tag, "RIFF", 4) != 0)
    throw std::runtime_error("read_wav: not a RIFF file: " + path);
  read_le<std::uint32_t>(in);  // riff size, unused
  in.read(tag, 4);
  if (!in || std::strncmp(tag, "WAVE", 4) != 0)
    throw std::runtime_error("read_wav: not a WAVE file: " + path);

  FmtChunk fmt;
  bool have_fmt = false;
  std::vector<char> data;
  while (in.read(tag, 4)) {
    const std::uint32_t chunk_size = read_le<std::uint32_t>(in);
    if (!in) break;
    if (std::strncmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw std::runtime_error("read_wav: malformed fmt chunk");
      fmt.format = read_le<std::uint16_t>(in);
      fmt.channels = read_le<std::uint16_t>(in);
      fmt.sample_rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      fmt.bits = read_le<std::uint16_t>(in);
      in.ignore(chunk_size - 16 + (chunk_size & 1));
      have_fmt = true;
    } else if (std::strncmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      in.read(data.data(), chunk_size);
      if (!in) throw std::runtime_error("read_wav: truncated data chunk");
      break;
    } else {
      in.ignore(chunk_size + (chunk_size & 1));
    }
  }
  if (!have_fmt || data.empty()) throw std::runtime_error("read_wav: missing fmt/data chunk");
  if (fmt.sample_rate != kSampleRate)
    throw std::runtime_error("read_wav: unsupported sample rate " +
                             std::to_string(fmt.sample_rate) + " (expected 16000), " + path);
  if (fmt.channels == 0) throw std::runtime_error("read_wav: zero channels");

  const bool pcm16 = fmt.format == 1 && fmt.bits == 16;
  const bool f32 = fmt.format == 3 && fmt.bits == 32;
  if (!pcm16 && !f32)
    throw std::runtime_error("read_wav: only 16-bit PCM or 32-bit float supported");

  const std::size_t bytes_per = pcm16 ? 2 : 4;
  const std::size_t n_frames = data.size() / (bytes_per * fmt.channels);
  MultiWaveform out(fmt.channels);
  for (auto& ch : out) ch.samples.resize(n_frames);

  const unsigned char* p = reinterpret_cast<const unsigned char*>(data.data());
  for (std::size_t i = 0; i < n_frames; ++i) {
    for (std::uint16_t c = 0; c < fmt.channels; ++c) {
      if (pcm16) {
        const std::uint16_t u = static_cast<std::uint16_t>(p[0]) | (static_cast<std::uint16_t>(p[1]) << 8);
        out[c].samples[i] = static_cast<std::int16_t>(u) / 32768.0;
        p += 2;
      } else {
        const std::uint32_t u = static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
                                (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
        out[c].samples[i] = u32_to_float(u);
        p += 4;
      }
    }
  }
  return out;
}

Waveform read_wav_mono(const std::string& path) {
  MultiWaveform chans = read_wav(path);
  if (chans.size() != 1)
    throw std::runtime_error("read_wav_mono: expected mono file, got " +
                             std::to_string(chans.size()) + " channels: " + path);
  return std::move(chans[0]);
}

void write_wav(const std::string& path, const MultiWaveform& channels, WavFormat format) {
  if (channels.empty()) throw std::invalid_argument("write_wav: no channels");
  const std::size_t n_frames = channels[0].size();
  for (const auto& ch : channels)
    if (ch.size() != n_frames) throw std::invalid_argument("write_wav: channel length mismatch");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_wav: cannot open " + path);

  const std::uint16_t n_ch = static_cast<std::uint16_t>(channels.size());
  const bool pcm16 = format == WavFormat::kPcm16;
  const std::uint16_t bytes_per = pcm16 ? 2 : 4;
  const std::uint32_t data_size = static_cast<std::uint32_t>(n_frames * n_ch * bytes_per);

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, pcm16 ? 1 : 3);
  write_le<std::uint16_t>(out, n_ch);
  write_le<std::uint32_t>(out, kSampleRate);
  write_le<std::uint32_t>(out, kSampleRate * n_ch * bytes_per);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(n_ch * bytes_per));
  write_le<std::uint16_t>(out, pcm16 ? 16 : 32);
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_size);

  for (std::size_t i = 0; i < n_frames; ++i) {
    for (std::uint16_t c = 0; c < n_ch; ++c) {
      const double x = channels[c].samples[i];
      if (pcm16) {
        const double scaled = std::round(x * 32768.0);
        const auto q = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
        write_le<std::uint16_t>(out, static_cast<std::uint16_t>(q));
      } else {
        write_le<std::uint32_t>(out, float_to_u32(static_cast<float>(x)));
      }
    }
  }
  if (!out) throw std::runtime_error("write_wav: write failed: " + path);
}

void write_wav(const std::string& path, const Waveform& mono, WavFormat format) {
  write_wav(path, MultiWaveform{mono}, format);
}

}  // namespace avsep::signal
