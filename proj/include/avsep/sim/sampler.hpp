#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "avsep/sim/scene.hpp"

namespace avsep::sim {

// Dataset-level sampling ranges. Rooms, T60, SNR and TIR follow the default
// simulation recipe; speaker and noise pools are split disjointly across
// train/validation/test.
struct DatasetConfig {
  int train_count = 60;
  int val_count = 10;
  int test_count = 20;
  int speaker_pool = 12;
  int noise_pool = 6;
  double p_one_speaker = 0.0;  // remaining mass goes to two/three-speaker
  double p_two_speaker = 0.5;
  double duration_s = 5.0;
  std::array<double, 2> t60_range{0.05, 0.7};
  std::array<double, 2> room_x{4.0, 10.0};
  std::array<double, 2> room_y{4.0, 10.0};
  std::array<double, 2> room_z{3.0, 6.0};
  std::array<double, 2> source_dist{0.5, 6.0};
  std::vector<double> snr_choices{6.0, 12.0, 18.0, 24.0, 30.0};
  std::vector<double> tir_choices{-6.0, 0.0, 6.0};
  bool with_noise = true;
};

struct SplitPools {
  std::vector<int> train_speakers, val_speakers, test_speakers;
  std::vector<int> train_noises, val_noises, test_noises;
};

SplitPools split_pools(const DatasetConfig& cfg, std::uint64_t seed);

// Deterministic under (cfg, seed); every scene carries its own derived seed
// so rendering is reproducible regardless of worker count or order.
std::vector<SceneSpec> sample_dataset(const DatasetConfig& cfg, std::uint64_t seed);

}  // namespace avsep::sim
