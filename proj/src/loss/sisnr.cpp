#include "avsep/loss/sisnr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "avsep/kern/fft.hpp"
#include "avsep/kern/kernels.hpp"

namespace avsep::loss {
namespace {

constexpr double k20OverLn10 = 20.0 / 2.30258509299404568402;

struct Projection {
  std::vector<double> est_c;  // zero-meaned estimate
  std::vector<double> ref_c;  // zero-meaned reference
  std::vector<double> err;    // est_c - alpha * ref_c
  double alpha = 0.0;
  double ref_nsq = 0.0;  // ||ref_c||^2
  double num = 0.0;      // ||alpha * ref_c||
  double den = 0.0;      // ||err||
};

Projection project(const signal::Waveform& est, const signal::Waveform& ref) {
  if (est.size() != ref.size())
    throw std::invalid_argument("si_snr: length mismatch");
  const std::size_t n = ref.size();
  if (n == 0) throw std::invalid_argument("si_snr: empty signals");

  Projection p;
  p.est_c = est.samples;
  p.ref_c = ref.samples;
  const double me = kern::sum(p.est_c.data(), n) / static_cast<double>(n);
  const double mr = kern::sum(p.ref_c.data(), n) / static_cast<double>(n);
  for (auto& v : p.est_c) v -= me;
  for (auto& v : p.ref_c) v -= mr;

  p.ref_nsq = kern::sum_sq(p.ref_c.data(), n);
  if (p.ref_nsq <= 0.0) throw std::invalid_argument("si_snr: silent reference");
  p.alpha = kern::dot(p.est_c.data(), p.ref_c.data(), n) / p.ref_nsq;
  p.err = p.est_c;
  kern::axpy(-p.alpha, p.ref_c.data(), p.err.data(), n);
  p.num = std::abs(p.alpha) * std::sqrt(p.ref_nsq);
  p.den = std::sqrt(kern::sum_sq(p.err.data(), n));
  return p;
}

// Un-center a gradient: centering is x - mean(x), whose adjoint subtracts
// the mean of the incoming gradient.
void uncenter(std::vector<double>& g) {
  const double m = kern::sum(g.data(), g.size()) / static_cast<double>(g.size());
  for (auto& v : g) v -= m;
}

}  // namespace

double si_snr(const signal::Waveform& est, const signal::Waveform& ref) {
  const Projection p = project(est, ref);
  if (p.num <= 0.0) return -kSiSnrCapDb;
  const double v = 20.0 * std::log10(p.num / (p.den + kNormEps));
  return std::clamp(v, -kSiSnrCapDb, kSiSnrCapDb);
}

double loss_si_snr_ratio_route(const signal::Waveform& est, const signal::Waveform& ref) {
  return -si_snr(est, ref);
}

LossValue loss_si_snr(const signal::Waveform& est, const signal::Waveform& ref) {
  const Projection p = project(est, ref);
  const std::size_t n = ref.size();
  LossValue out;
  out.grad.assign(n, 0.0);
  if (p.num <= 0.0) {
    out.value = kSiSnrCapDb;
    return out;
  }
  const double raw = 20.0 * std::log10((p.den + kNormEps) / p.num);
  out.value = std::clamp(raw, -kSiSnrCapDb, kSiSnrCapDb);
  if (out.value != raw || p.den <= 0.0) return out;  // clamped: flat region

  // d/d est of [ln(den+eps) - ln(num)], times 20/ln10.
  const double c_err = k20OverLn10 / (p.den * (p.den + kNormEps));
  const double c_ref = -k20OverLn10 / (p.alpha * p.ref_nsq);
  for (std::size_t i = 0; i < n; ++i)
    out.grad[i] = c_err * p.err[i] + c_ref * p.ref_c[i];
  uncenter(out.grad);
  return out;
}

LossValue loss_si_snr_nonneg(const signal::Waveform& est, const signal::Waveform& ref) {
  const Projection p = project(est, ref);
  const std::size_t n = ref.size();
  const double rho = p.den / (p.num + kNormEps);
  LossValue out;
  out.value = 20.0 * std::log10(rho + 1.0);
  out.grad.assign(n, 0.0);
  if (p.den <= 1e-15) return out;  // at the optimum; gradient vanishes

  // drho/d est through both ||err|| and alpha.
  const double inv = 1.0 / (p.num + kNormEps);
  const double c = k20OverLn10 / (rho + 1.0);
  const double sign_a = p.alpha >= 0.0 ? 1.0 : -1.0;
  const double ref_n = std::sqrt(p.ref_nsq);
  const double c_err = c * inv / p.den;
  const double c_ref = -c * p.den * inv * inv * sign_a / ref_n;
  for (std::size_t i = 0; i < n; ++i)
    out.grad[i] = c_err * p.err[i] + c_ref * p.ref_c[i];
  uncenter(out.grad);
  return out;
}

MatLossValue loss_mse(const util::Mat& est_mag, const util::Mat& ref_mag) {
  util::require_same_shape(est_mag, ref_mag, "loss_mse");
  const std::size_t n = est_mag.size();
  if (n == 0) throw std::invalid_argument("loss_mse: empty input");
  MatLossValue out;
  out.grad = util::Mat(est_mag.rows, est_mag.cols);
  double acc = 0.0;
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = est_mag.v[i] - ref_mag.v[i];
    acc += d * d;
    out.grad.v[i] = 2.0 * d * inv_n;
  }
  out.value = acc * inv_n;
  return out;
}

util::Mat recompose_adjoint(const std::vector<double>& grad_wav, const util::Mat& ph,
                            const signal::StftConfig& cfg) {
  const std::size_t frames = ph.rows;
  const int n = cfg.fft_size;
  const int bins = cfg.bins();
  const auto win = cfg.window();
  kern::Fft fft(n);

  util::Mat grad_mag(frames, bins);
  std::vector<std::complex<double>> fx(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < frames; ++t) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = t * cfg.hop + i;
      const double g = k < grad_wav.size() ? grad_wav[k] : 0.0;
      fx[i] = {g * win[i], 0.0};
    }
    fft.forward(fx.data());
    for (int f = 0; f < bins; ++f) {
      const double cf = (f == 0 || f == n / 2) ? 1.0 : 2.0;
      const double phi = ph(t, f);
      grad_mag(t, f) =
          cf * inv_n * (fx[f].real() * std::cos(phi) + fx[f].imag() * std::sin(phi));
    }
  }
  return grad_mag;
}

MatLossValue loss_multi_obj(const util::Mat& est_mag, const util::Mat& ref_mag,
                            const util::Mat& mix_phase, const signal::Waveform& ref_wav,
                            double lambda, const signal::StftConfig& cfg) {
  if (lambda < 0.0) throw std::invalid_argument("loss_multi_obj: lambda must be >= 0");
  MatLossValue out = loss_mse(est_mag, ref_mag);
  if (lambda == 0.0) return out;

  util::require_same_shape(est_mag, mix_phase, "loss_multi_obj");
  signal::Waveform est_wav = signal::recompose(est_mag, mix_phase, cfg);
  const std::size_t len = std::min(est_wav.size(), ref_wav.size());
  signal::Waveform est_cut(std::vector<double>(est_wav.samples.begin(),
                                               est_wav.samples.begin() + len));
  signal::Waveform ref_cut(std::vector<double>(ref_wav.samples.begin(),
                                               ref_wav.samples.begin() + len));
  LossValue lw = loss_si_snr_nonneg(est_cut, ref_cut);
  out.value += lambda * lw.value;

  lw.grad.resize(est_wav.size(), 0.0);  // truncated tail gets zero gradient
  util::Mat g = recompose_adjoint(lw.grad, mix_phase, cfg);
  kern::axpy(lambda, g.v.data(), out.grad.v.data(), g.v.size());
  return out;
}

}  // namespace avsep::loss
