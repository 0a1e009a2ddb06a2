#pragma once

#include "avsep/signal/waveform.hpp"
#include "avsep/util/mat.hpp"

namespace avsep::signal {

// 32 ms square-root Hann analysis at 50% overlap. The sqrt-Hann window at
// this overlap satisfies COLA exactly (w[i]^2 + w[i+hop]^2 == 1), so
// synthesis with the same window reconstructs interior samples without a
// normalization pass.
struct StftConfig {
  int window_length = 512;
  int hop = 256;
  int fft_size = 512;

  int bins() const { return fft_size / 2 + 1; }  // 257
  // No implicit padding: frames = 1 + floor((len - window) / hop).
  std::size_t frame_count(std::size_t samples) const;
  // w[i] = sqrt(hann(i)) = sin(pi*i/N), the periodic convention.
  std::vector<double> window() const;
};

using Spectrogram = util::CMat;  // frames x 257

Spectrogram stft(const Waveform& w, const StftConfig& cfg = {});
Waveform istft(const Spectrogram& spec, const StftConfig& cfg = {});

util::Mat magnitude(const Spectrogram& spec);
util::Mat phase(const Spectrogram& spec);

// istft of mag .* exp(j*phase); how estimated magnitudes are turned back
// into a waveform using the mixture phase.
Waveform recompose(const util::Mat& mag, const util::Mat& ph, const StftConfig& cfg = {});

}  // namespace avsep::signal
