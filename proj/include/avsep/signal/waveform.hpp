#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace avsep::signal {

inline constexpr int kSampleRate = 16000;

// Mono time-domain signal. Everything in the system runs at 16 kHz.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = kSampleRate;

  Waveform() = default;
  explicit Waveform(std::vector<double> s, int rate = kSampleRate)
      : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  double energy() const;
};

// Channel-major multichannel signal (channel -> samples).
using MultiWaveform = std::vector<Waveform>;

enum class WavFormat { kPcm16, kFloat32 };

// RIFF WAV I/O, 16 kHz only, PCM16 or IEEE float32, interleaved channels.
// Files at any other sample rate are rejected; there is no implicit
// resampling anywhere in the system.
MultiWaveform read_wav(const std::string& path);
Waveform read_wav_mono(const std::string& path);
void write_wav(const std::string& path, const MultiWaveform& channels,
               WavFormat format = WavFormat::kFloat32);
void write_wav(const std::string& path, const Waveform& mono,
               WavFormat format = WavFormat::kFloat32);

}  // namespace avsep::signal
