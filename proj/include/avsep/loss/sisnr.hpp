#pragma once

#include <vector>

#include "avsep/signal/stft.hpp"
#include "avsep/signal/waveform.hpp"
#include "avsep/util/mat.hpp"

namespace avsep::loss {

inline constexpr double kNormEps = 1e-8;  // guard inside norms/ratios
inline constexpr double kSiSnrCapDb = 80.0;

// Scalar objective with gradient w.r.t. the waveform estimate.
struct LossValue {
  double value = 0.0;
  std::vector<double> grad;
};

// Scalar objective with gradient w.r.t. an estimated T-F magnitude.
struct MatLossValue {
  double value = 0.0;
  util::Mat grad;
};

// Scale-invariant SNR in dB. Both signals are zero-meaned, the estimate is
// projected onto the reference (alpha = <est,ref>/||ref||^2) and the result
// is clamped to +-80 dB so the perfect-reconstruction case stays finite.
double si_snr(const signal::Waveform& est, const signal::Waveform& ref);

// -SI-SNR, written in the "error over signal" form; analytic gradient.
LossValue loss_si_snr(const signal::Waveform& est, const signal::Waveform& ref);

// The same quantity through the "signal over error" route, negated. Kept as
// an independent algebraic path for the identity tests.
double loss_si_snr_ratio_route(const signal::Waveform& est, const signal::Waveform& ref);

// Non-negative SI-SNR loss: 20*log10(||e||/||alpha s|| + 1).
LossValue loss_si_snr_nonneg(const signal::Waveform& est, const signal::Waveform& ref);

// Mean squared magnitude error over all T-F units.
MatLossValue loss_mse(const util::Mat& est_mag, const util::Mat& ref_mag);

// L_MSE + lambda * nonneg SI-SNR loss, where the waveform estimate is
// recompose(est_mag, mix_phase). Gradient w.r.t. est_mag composes the MSE
// term with the adjoint of the magnitude->waveform resynthesis. The SI-SNR
// branch is skipped entirely at lambda == 0 so that run is step-identical
// to a pure MSE objective.
MatLossValue loss_multi_obj(const util::Mat& est_mag, const util::Mat& ref_mag,
                            const util::Mat& mix_phase, const signal::Waveform& ref_wav,
                            double lambda, const signal::StftConfig& cfg = {});

// Adjoint of mag -> istft(mag .* exp(j*phase)) applied to a waveform
// gradient; used by the multi-objective loss and the training graph.
util::Mat recompose_adjoint(const std::vector<double>& grad_wav, const util::Mat& ph,
                            const signal::StftConfig& cfg = {});

}  // namespace avsep::loss
