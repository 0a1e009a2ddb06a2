#include "avsep/loss/estoi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "avsep/kern/fft.hpp"
#include "avsep/util/mat.hpp"

namespace avsep::loss {
namespace {

constexpr int kFsModel = 10000;
constexpr int kFrame = 256;
constexpr int kHop = 128;
constexpr int kNfft = 512;
constexpr int kBands = 15;
constexpr double kBandLow = 150.0;
constexpr int kSegLen = 30;
constexpr double kDynRangeDb = 40.0;
constexpr double kTiny = 1e-20;

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// 16 kHz -> 10 kHz polyphase windowed-sinc resampler.
std::vector<double> resample_16k_to_10k(const std::vector<double>& x) {
  constexpr double kRatio = 16000.0 / 10000.0;
  constexpr double kCutoff = 10000.0 / 2.0 / 16000.0;  // of input rate
  constexpr int kHalfWidth = 24;
  const std::size_t out_len = static_cast<std::size_t>(x.size() / kRatio);
  std::vector<double> y(out_len, 0.0);
  for (std::size_t m = 0; m < out_len; ++m) {
    const double center = m * kRatio;
    const long k0 = static_cast<long>(std::ceil(center - kHalfWidth));
    const long k1 = static_cast<long>(std::floor(center + kHalfWidth));
    double acc = 0.0;
    for (long k = std::max<long>(0, k0); k <= std::min<long>(x.size() - 1, k1); ++k) {
      const double t = center - k;
      const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * t / kHalfWidth));
      acc += x[k] * 2.0 * kCutoff * sinc(2.0 * kCutoff * t) * w;
    }
    y[m] = acc;
  }
  return y;
}

std::vector<double> hanning(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * (i + 1) / (n + 1)));
  return w;
}

// Keep only frames within 40 dB of the loudest reference frame and
// overlap-add the survivors back into time signals.
void remove_silent_frames(std::vector<double>& x, std::vector<double>& y) {
  if (x.size() < kFrame) throw std::invalid_argument("estoi: signal too short");
  const auto w = hanning(kFrame);
  const std::size_t n_frames = 1 + (x.size() - kFrame) / kHop;
  std::vector<double> frame_db(n_frames);
  double peak = -1e300;
  for (std::size_t t = 0; t < n_frames; ++t) {
    double e = 0.0;
    for (int i = 0; i < kFrame; ++i) {
      const double v = x[t * kHop + i] * w[i];
      e += v * v;
    }
    frame_db[t] = 10.0 * std::log10(e + kTiny);
    peak = std::max(peak, frame_db[t]);
  }
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < n_frames; ++t)
    if (frame_db[t] > peak - kDynRangeDb) kept.push_back(t);
  if (kept.empty()) throw std::invalid_argument("estoi: silent reference");

  const std::size_t out_len = (kept.size() - 1) * kHop + kFrame;
  std::vector<double> xs(out_len, 0.0), ys(out_len, 0.0);
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const std::size_t src = kept[j] * kHop;
    for (int i = 0; i < kFrame; ++i) {
      xs[j * kHop + i] += x[src + i] * w[i];
      ys[j * kHop + i] += y[src + i] * w[i];
    }
  }
  x = std::move(xs);
  y = std::move(ys);
}

// Band-edge bins chosen by nearest-bin matching, as in the reference
// one-third-octave filterbank.
std::vector<std::pair<int, int>> third_octave_bins() {
  std::vector<std::pair<int, int>> bands(kBands);
  auto nearest_bin = [](double freq) {
    int best = 0;
    double best_d = 1e300;
    for (int k = 0; k <= kNfft / 2; ++k) {
      const double f = static_cast<double>(k) * kFsModel / kNfft;
      const double d = (f - freq) * (f - freq);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };
  for (int j = 0; j < kBands; ++j) {
    const double cf = kBandLow * std::pow(2.0, j / 3.0);
    bands[j] = {nearest_bin(cf / std::pow(2.0, 1.0 / 6.0)),
                nearest_bin(cf * std::pow(2.0, 1.0 / 6.0))};
  }
  return bands;
}

// 15 x M band-magnitude matrix.
util::Mat band_magnitudes(const std::vector<double>& x) {
  const auto w = hanning(kFrame);
  const auto bands = third_octave_bins();
  const std::size_t n_frames = x.size() >= kFrame ? 1 + (x.size() - kFrame) / kHop : 0;
  kern::Fft fft(kNfft);
  util::Mat bm(kBands, n_frames);
  std::vector<std::complex<double>> fx(kNfft);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (int i = 0; i < kNfft; ++i)
      fx[i] = {i < kFrame ? x[t * kHop + i] * w[i] : 0.0, 0.0};
    fft.forward(fx.data());
    for (int j = 0; j < kBands; ++j) {
      double e = 0.0;
      for (int k = bands[j].first; k < bands[j].second; ++k) e += std::norm(fx[k]);
      bm(j, t) = std::sqrt(e);
    }
  }
  return bm;
}

void normalize_rows(util::Mat& m) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    double mean = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) mean += m(r, c);
    mean /= static_cast<double>(m.cols);
    double nrm = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) {
      m(r, c) -= mean;
      nrm += m(r, c) * m(r, c);
    }
    nrm = std::sqrt(nrm) + kTiny;
    for (std::size_t c = 0; c < m.cols; ++c) m(r, c) /= nrm;
  }
}

void normalize_cols(util::Mat& m) {
  for (std::size_t c = 0; c < m.cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m.rows; ++r) mean += m(r, c);
    mean /= static_cast<double>(m.rows);
    double nrm = 0.0;
    for (std::size_t r = 0; r < m.rows; ++r) {
      m(r, c) -= mean;
      nrm += m(r, c) * m(r, c);
    }
    nrm = std::sqrt(nrm) + kTiny;
    for (std::size_t r = 0; r < m.rows; ++r) m(r, c) /= nrm;
  }
}

}  // namespace

double estoi(const signal::Waveform& est, const signal::Waveform& ref) {
  if (est.size() != ref.size()) throw std::invalid_argument("estoi: length mismatch");
  if (est.sample_rate != signal::kSampleRate || ref.sample_rate != signal::kSampleRate)
    throw std::invalid_argument("estoi: expected 16 kHz input");

  std::vector<double> x = resample_16k_to_10k(ref.samples);
  std::vector<double> y = resample_16k_to_10k(est.samples);
  remove_silent_frames(x, y);

  const util::Mat bx = band_magnitudes(x);
  const util::Mat by = band_magnitudes(y);
  const std::size_t frames = bx.cols;
  if (frames < kSegLen)
    throw std::invalid_argument("estoi: fewer than 30 active frames (need >= 384 ms)");

  double acc = 0.0;
  const std::size_t n_segments = frames - kSegLen + 1;
  for (std::size_t m = 0; m < n_segments; ++m) {
    util::Mat sx(kBands, kSegLen), sy(kBands, kSegLen);
    for (int j = 0; j < kBands; ++j) {
      for (int n = 0; n < kSegLen; ++n) {
        sx(j, n) = bx(j, m + n);
        sy(j, n) = by(j, m + n);
      }
    }
    normalize_rows(sx);
    normalize_rows(sy);
    normalize_cols(sx);
    normalize_cols(sy);
    double d = 0.0;
    for (std::size_t i = 0; i < sx.size(); ++i) d += sx.v[i] * sy.v[i];
    acc += d / kSegLen;
  }
  return acc / static_cast<double>(n_segments);
}

}  // namespace avsep::loss
