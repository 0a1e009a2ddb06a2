#include "avsep/signal/stft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avsep/kern/fft.hpp"
#include "avsep/kern/kernels.hpp"

namespace avsep::signal {

double Waveform::energy() const { return kern::sum_sq(samples.data(), samples.size()); }

std::size_t StftConfig::frame_count(std::size_t samples) const {
  if (samples < static_cast<std::size_t>(window_length))
    throw std::invalid_argument("stft: signal shorter than one analysis window");
  return 1 + (samples - window_length) / hop;
}

std::vector<double> StftConfig::window() const {
  std::vector<double> w(window_length);
  for (int i = 0; i < window_length; ++i)
    w[i] = std::sin(std::numbers::pi * i / static_cast<double>(window_length));
  return w;
}

Spectrogram stft(const Waveform& w, const StftConfig& cfg) {
  if (w.sample_rate != kSampleRate)
    throw std::invalid_argument("stft: sample rate must be 16000");
  const std::size_t frames = cfg.frame_count(w.size());
  const int bins = cfg.bins();
  const auto win = cfg.window();
  kern::Fft fft(cfg.fft_size);

  Spectrogram spec(frames, bins);
  std::vector<double> buf(cfg.fft_size);
  std::vector<std::complex<double>> fx(cfg.fft_size);
  for (std::size_t t = 0; t < frames; ++t) {
    const double* src = w.samples.data() + t * cfg.hop;
    kern::vmul(src, win.data(), buf.data(), cfg.window_length);
    for (int i = 0; i < cfg.fft_size; ++i) fx[i] = {buf[i], 0.0};
    fft.forward(fx.data());
    for (int f = 0; f < bins; ++f) spec(t, f) = fx[f];
  }
  return spec;
}

Waveform istft(const Spectrogram& spec, const StftConfig& cfg) {
  if (spec.cols != static_cast<std::size_t>(cfg.bins()))
    throw std::invalid_argument("istft: expected fft_size/2+1 bins");
  const std::size_t frames = spec.rows;
  const auto win = cfg.window();
  kern::Fft fft(cfg.fft_size);

  const std::size_t out_len = frames ? (frames - 1) * cfg.hop + cfg.window_length : 0;
  Waveform out(std::vector<double>(out_len, 0.0));
  std::vector<std::complex<double>> fx(cfg.fft_size);
  std::vector<double> frame(cfg.window_length);
  const int n = cfg.fft_size;
  for (std::size_t t = 0; t < frames; ++t) {
    fx[0] = spec(t, 0);
    for (int f = 1; f < n / 2; ++f) {
      fx[f] = spec(t, f);
      fx[n - f] = std::conj(spec(t, f));
    }
    fx[n / 2] = spec(t, n / 2);
    fft.inverse(fx.data());
    for (int i = 0; i < cfg.window_length; ++i) frame[i] = fx[i].real();
    kern::vmla(frame.data(), win.data(), out.samples.data() + t * cfg.hop, cfg.window_length);
  }
  return out;
}

util::Mat magnitude(const Spectrogram& spec) {
  util::Mat m(spec.rows, spec.cols);
  for (std::size_t i = 0; i < spec.v.size(); ++i) m.v[i] = std::abs(spec.v[i]);
  return m;
}

util::Mat phase(const Spectrogram& spec) {
  util::Mat p(spec.rows, spec.cols);
  for (std::size_t i = 0; i < spec.v.size(); ++i)
    p.v[i] = std::atan2(spec.v[i].imag(), spec.v[i].real());
  return p;
}

Waveform recompose(const util::Mat& mag, const util::Mat& ph, const StftConfig& cfg) {
  util::require_same_shape(mag, ph, "recompose");
  Spectrogram spec(mag.rows, mag.cols);
  for (std::size_t i = 0; i < mag.v.size(); ++i)
    spec.v[i] = std::polar(mag.v[i], ph.v[i]);
  return istft(spec, cfg);
}

}  // namespace avsep::signal
