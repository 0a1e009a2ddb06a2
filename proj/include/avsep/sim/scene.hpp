#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "avsep/signal/waveform.hpp"
#include "avsep/sim/geometry.hpp"
#include "avsep/sim/rir.hpp"

namespace avsep::sim {

struct SourceSpec {
  Vec3 position;
  int speaker_id = -1;  // >= 0 for speech sources
  int noise_id = -1;    // >= 0 for noise sources
  std::uint64_t seed = 0;
};

struct SceneSpec {
  int id = 0;
  std::string split = "train";
  RoomSpec room;
  ArrayGeometry array;
  SourceSpec target;
  std::vector<SourceSpec> interferers;  // 0..2
  std::optional<SourceSpec> noise;
  double snr_db = 20.0;
  double tir_db = 0.0;
  double duration_s = 5.0;
  std::uint64_t seed = 0;
  std::uint64_t voice_pool_seed = 0;
};

struct SceneMetadata {
  double realized_snr_db = 0.0;  // NaN when the scene has no noise
  double realized_tir_db = 0.0;  // NaN when the scene has no interferers
  double drr_db = 0.0;
  double t60 = 0.0;
  double doa_target_rad = 0.0;
  std::vector<double> doa_interferers_rad;
  double min_angle_deg = 0.0;  // NaN without interferers
  int n_speakers = 1;
  std::uint64_t seed = 0;
};

struct MixtureBundle {
  signal::MultiWaveform mixture;  // 9 channels
  signal::Waveform reverb_target;
  signal::Waveform anechoic_target;
  signal::Waveform reverb_interference;
  signal::Waveform reverb_noise;
  signal::Waveform target_dry;                  // clean sources drive the
  std::vector<signal::Waveform> interferer_dry;  // visual embedding surrogate
  SceneMetadata meta;
};

// Gain to apply to the noise amplitude so the reverberant target-to-noise
// energy ratio equals snr_db exactly.
double scale_to_snr(const signal::Waveform& target, const signal::Waveform& noise,
                    double snr_db);

// Joint gain for all interferers so the summed reverberant interference
// realizes tir_db against the target.
double scale_to_tir(const signal::Waveform& target,
                    const std::vector<signal::Waveform>& interferers, double tir_db);

// Per-component channel stacks prior to summation; exposed so superposition
// can be checked against the assembled mixture.
struct RenderedComponents {
  signal::MultiWaveform target;        // per channel
  signal::MultiWaveform interference;  // combined, already scaled
  signal::MultiWaveform noise;         // already scaled
};

MixtureBundle render_scene(const SceneSpec& spec);
RenderedComponents render_components(const SceneSpec& spec);

}  // namespace avsep::sim
