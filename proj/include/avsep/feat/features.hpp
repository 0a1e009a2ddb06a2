#pragma once

#include <array>
#include <utility>
#include <vector>

#include "avsep/signal/stft.hpp"
#include "avsep/sim/geometry.hpp"
#include "avsep/util/mat.hpp"

namespace avsep::feat {

inline constexpr double kLogEps = 1e-10;
inline constexpr int kBins = 257;

// The five channel pairs whose cosIPDs are concatenated, covering five
// distinct mic distances.
struct MicPairSet {
  std::array<std::pair<int, int>, 5> pairs{{{0, 8}, {0, 4}, {1, 4}, {4, 6}, {4, 5}}};
};

// log(|Y|^2 + eps), T x 257.
util::Mat lps(const signal::Spectrogram& spec);

// cos of the interchannel phase difference for each pair, T x 1285.
util::Mat cos_ipd(const std::vector<signal::Spectrogram>& channels,
                  const MicPairSet& pairs = {});

// Far-field plane-wave steering coefficients, bins x 9, unit modulus,
// mic 0 as phase reference.
struct SteeringVector {
  util::CMat coeff;  // 257 x 9
};

SteeringVector steering_vector(double doa_rad, const sim::ArrayGeometry& array,
                               int bins = kBins);

// Per-T-F sum over mics of the 2-D cosine similarity between the steering
// coefficient and the observed channel ratio; in [-9, 9]. Bins where the
// reference channel is (numerically) silent contribute zero.
util::Mat angle_feature(const std::vector<signal::Spectrogram>& channels,
                        const SteeringVector& sv);

struct FeatureBlock {
  util::Mat lps_norm;  // T x 257, per-frame zero mean / unit variance
  util::Mat cos_ipd;   // T x 1285
  util::Mat angle;     // T x 257
  util::Mat fused;     // T x 1799, [LPS | cosIPD | AF]
};

// Normalizes the LPS per frame (the learned affine lives in the model) and
// concatenates the three features in order.
FeatureBlock assemble_input(const util::Mat& lps, const util::Mat& cos_ipd,
                            const util::Mat& angle);

}  // namespace avsep::feat
