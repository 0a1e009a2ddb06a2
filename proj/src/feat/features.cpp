#include "avsep/feat/features.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avsep/sim/rir.hpp"

namespace avsep::feat {
namespace {

void check_nine_channels(const std::vector<signal::Spectrogram>& channels) {
  if (channels.size() != sim::ArrayGeometry::kNumMics)
    throw std::invalid_argument("features: expected 9 channel spectrograms");
  for (const auto& c : channels)
    if (c.rows != channels[0].rows || c.cols != channels[0].cols)
      throw std::invalid_argument("features: channel spectrograms not aligned");
}

}  // namespace

util::Mat lps(const signal::Spectrogram& spec) {
  util::Mat out(spec.rows, spec.cols);
  for (std::size_t i = 0; i < spec.v.size(); ++i)
    out.v[i] = std::log(std::norm(spec.v[i]) + kLogEps);
  return out;
}

util::Mat cos_ipd(const std::vector<signal::Spectrogram>& channels, const MicPairSet& pairs) {
  check_nine_channels(channels);
  const std::size_t frames = channels[0].rows;
  const std::size_t bins = channels[0].cols;
  util::Mat out(frames, pairs.pairs.size() * bins);
  for (std::size_t p = 0; p < pairs.pairs.size(); ++p) {
    const auto& a = channels[pairs.pairs[p].first];
    const auto& b = channels[pairs.pairs[p].second];
    for (std::size_t t = 0; t < frames; ++t) {
      for (std::size_t f = 0; f < bins; ++f) {
        const auto& y1 = a(t, f);
        const auto& y2 = b(t, f);
        const double phi =
            std::atan2(y2.imag(), y2.real()) - std::atan2(y1.imag(), y1.real());
        out(t, p * bins + f) = std::cos(phi);
      }
    }
  }
  return out;
}

SteeringVector steering_vector(double doa_rad, const sim::ArrayGeometry& array, int bins) {
  if (doa_rad < 0.0 || doa_rad > std::numbers::pi)
    throw std::invalid_argument("steering_vector: DOA outside [0, pi]");
  SteeringVector sv;
  sv.coeff = util::CMat(bins, sim::ArrayGeometry::kNumMics);
  const double cos_theta = std::cos(doa_rad);
  for (int m = 0; m < sim::ArrayGeometry::kNumMics; ++m) {
    const double tau = (array.axial[m] - array.axial[0]) * cos_theta / sim::kSpeedOfSound;
    for (int f = 0; f < bins; ++f) {
      const double f_hz = static_cast<double>(f) * signal::kSampleRate / 512.0;
      const double ang = -2.0 * std::numbers::pi * f_hz * tau;
      sv.coeff(f, m) = {std::cos(ang), std::sin(ang)};
    }
  }
  return sv;
}

util::Mat angle_feature(const std::vector<signal::Spectrogram>& channels,
                        const SteeringVector& sv) {
  check_nine_channels(channels);
  const std::size_t frames = channels[0].rows;
  const std::size_t bins = channels[0].cols;
  if (sv.coeff.rows != bins)
    throw std::invalid_argument("angle_feature: steering vector bin count mismatch");

  util::Mat out(frames, bins);
  const auto& ref = channels[0];
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t f = 0; f < bins; ++f) {
      const auto y0 = ref(t, f);
      const double m0 = std::abs(y0);
      if (m0 < 1e-12) continue;  // degenerate bin contributes 0
      double acc = 0.0;
      for (int m = 0; m < sim::ArrayGeometry::kNumMics; ++m) {
        const auto ym = channels[m](t, f);
        const double mm = std::abs(ym);
        // <e, Y^m/Y^0> as 2-D vectors == Re(e * conj(Y^m) * Y^0).
        const auto num = sv.coeff(f, m) * std::conj(ym) * y0;
        acc += num.real() / std::max(mm * m0, kLogEps);
      }
      out(t, f) = acc;
    }
  }
  return out;
}

FeatureBlock assemble_input(const util::Mat& lps, const util::Mat& cos_ipd,
                            const util::Mat& angle) {
  if (lps.rows != cos_ipd.rows || lps.rows != angle.rows)
    throw std::invalid_argument("assemble_input: frame-count mismatch");
  FeatureBlock fb;
  fb.lps_norm = lps;
  for (std::size_t t = 0; t < lps.rows; ++t) {
    double* row = fb.lps_norm.row(t);
    double mean = 0.0;
    for (std::size_t f = 0; f < lps.cols; ++f) mean += row[f];
    mean /= static_cast<double>(lps.cols);
    double var = 0.0;
    for (std::size_t f = 0; f < lps.cols; ++f) {
      row[f] -= mean;
      var += row[f] * row[f];
    }
    const double inv = 1.0 / std::sqrt(var / static_cast<double>(lps.cols) + 1e-8);
    for (std::size_t f = 0; f < lps.cols; ++f) row[f] *= inv;
  }
  fb.cos_ipd = cos_ipd;
  fb.angle = angle;

  fb.fused = util::Mat(lps.rows, lps.cols + cos_ipd.cols + angle.cols);
  for (std::size_t t = 0; t < lps.rows; ++t) {
    double* dst = fb.fused.row(t);
    std::copy(fb.lps_norm.row(t), fb.lps_norm.row(t) + lps.cols, dst);
    std::copy(cos_ipd.row(t), cos_ipd.row(t) + cos_ipd.cols, dst + lps.cols);
    std::copy(angle.row(t), angle.row(t) + angle.cols, dst + lps.cols + cos_ipd.cols);
  }
  return fb;
}

}  // namespace avsep::feat
