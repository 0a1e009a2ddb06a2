#include "avsep/sim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avsep/util/rng.hpp"

namespace avsep::sim {
namespace {

constexpr double kWallMargin = 0.3;

std::vector<int> shuffled_ids(int count, util::Rng& rng) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  for (int i = count - 1; i > 0; --i)
    std::swap(ids[i], ids[rng.uniform_int(static_cast<std::uint64_t>(i) + 1)]);
  return ids;
}

int pick(const std::vector<int>& pool, util::Rng& rng) {
  return pool[rng.uniform_int(pool.size())];
}

Vec3 place_source(const SceneSpec& scene, const DatasetConfig& cfg, util::Rng& rng) {
  const Vec3& c = scene.array.center;
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double dist = rng.uniform(cfg.source_dist[0], cfg.source_dist[1]);
    const double dz = rng.uniform(-0.4, 0.4);
    const Vec3 p{c.x + dist * std::cos(ang), c.y + dist * std::sin(ang),
                 std::clamp(c.z + dz, kWallMargin + 0.1, scene.room.dims.z - kWallMargin - 0.1)};
    if (scene.room.contains(p, kWallMargin) &&
        (p - c).norm() >= cfg.source_dist[0] && (p - c).norm() <= cfg.source_dist[1])
      return p;
  }
  // Small rooms can make long distances impossible; fall back to a close
  // broadside placement, which is always legal.
  const double dist = std::max(0.6, cfg.source_dist[0]);
  Vec3 perp{-scene.array.axis.y, scene.array.axis.x, 0.0};
  Vec3 p = c + perp * dist;
  p.x = std::clamp(p.x, kWallMargin + 0.05, scene.room.dims.x - kWallMargin - 0.05);
  p.y = std::clamp(p.y, kWallMargin + 0.05, scene.room.dims.y - kWallMargin - 0.05);
  return p;
}

}  // namespace

SplitPools split_pools(const DatasetConfig& cfg, std::uint64_t seed) {
  if (cfg.speaker_pool < 9)
    throw std::invalid_argument("sample_dataset: speaker pool too small for disjoint splits");
  if (cfg.noise_pool < 3)
    throw std::invalid_argument("sample_dataset: noise pool too small for disjoint splits");

  util::Rng rng(util::hash_seed(seed, "pool-split"));
  SplitPools p;
  const auto speakers = shuffled_ids(cfg.speaker_pool, rng);
  // Ceil-split so validation/test always keep the three distinct speakers a
  // three-speaker scene needs.
  const int val_n = std::max(3, cfg.speaker_pool / 6);
  const int test_n = std::max(3, cfg.speaker_pool / 4);
  const int train_n = cfg.speaker_pool - val_n - test_n;
  if (train_n < 3)
    throw std::invalid_argument("sample_dataset: speaker pool too small for disjoint splits");
  p.train_speakers.assign(speakers.begin(), speakers.begin() + train_n);
  p.val_speakers.assign(speakers.begin() + train_n, speakers.begin() + train_n + val_n);
  p.test_speakers.assign(speakers.begin() + train_n + val_n, speakers.end());

  const auto noises = shuffled_ids(cfg.noise_pool, rng);
  const int ntest = std::max(1, cfg.noise_pool / 4);
  const int nval = std::max(1, cfg.noise_pool / 6);
  p.train_noises.assign(noises.begin(), noises.end() - ntest - nval);
  p.val_noises.assign(noises.end() - ntest - nval, noises.end() - ntest);
  p.test_noises.assign(noises.end() - ntest, noises.end());
  if (p.train_noises.empty())
    throw std::invalid_argument("sample_dataset: noise pool too small for disjoint splits");
  return p;
}

std::vector<SceneSpec> sample_dataset(const DatasetConfig& cfg, std::uint64_t seed) {
  const SplitPools pools = split_pools(cfg, seed);
  const std::uint64_t voice_pool_seed = util::hash_seed(seed, "voices");

  const int total = cfg.train_count + cfg.val_count + cfg.test_count;
  std::vector<SceneSpec> scenes;
  scenes.reserve(total);
  for (int i = 0; i < total; ++i) {
    SceneSpec s;
    s.id = i;
    s.split = i < cfg.train_count ? "train"
              : i < cfg.train_count + cfg.val_count ? "val"
                                                    : "test";
    s.seed = util::hash_seed(seed, "scene", static_cast<std::uint64_t>(i));
    s.voice_pool_seed = voice_pool_seed;
    s.duration_s = cfg.duration_s;

    util::Rng rng(s.seed);
    s.room.dims = {rng.uniform(cfg.room_x[0], cfg.room_x[1]),
                   rng.uniform(cfg.room_y[0], cfg.room_y[1]),
                   rng.uniform(cfg.room_z[0], cfg.room_z[1])};
    s.room.t60 = rng.uniform(cfg.t60_range[0], cfg.t60_range[1]);

    const double margin = s.array.half_length() + 0.5;
    s.array.center = {rng.uniform(margin, s.room.dims.x - margin),
                      rng.uniform(margin, s.room.dims.y - margin),
                      rng.uniform(1.0, std::min(2.0, s.room.dims.z - 0.5))};
    const double psi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    s.array.axis = {std::cos(psi), std::sin(psi), 0.0};

    const auto& speakers = s.split == "train"  ? pools.train_speakers
                           : s.split == "val" ? pools.val_speakers
                                              : pools.test_speakers;
    const auto& noises = s.split == "train"  ? pools.train_noises
                         : s.split == "val" ? pools.val_noises
                                            : pools.test_noises;

    const double u = rng.uniform();
    const int n_speakers = u < cfg.p_one_speaker                    ? 1
                           : u < cfg.p_one_speaker + cfg.p_two_speaker ? 2
                                                                       : 3;
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < n_speakers) {
      const int id = pick(speakers, rng);
      if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) chosen.push_back(id);
    }

    s.target.speaker_id = chosen[0];
    s.target.seed = util::hash_seed(s.seed, "src", 0);
    s.target.position = place_source(s, cfg, rng);
    for (int k = 1; k < n_speakers; ++k) {
      SourceSpec inter;
      inter.speaker_id = chosen[k];
      inter.seed = util::hash_seed(s.seed, "src", static_cast<std::uint64_t>(k));
      inter.position = place_source(s, cfg, rng);
      s.interferers.push_back(inter);
    }
    if (cfg.with_noise) {
      SourceSpec noise;
      noise.noise_id = pick(noises, rng);
      noise.seed = util::hash_seed(s.seed, "noise-src");
      noise.position = place_source(s, cfg, rng);
      s.noise = noise;
    }
    s.snr_db = cfg.snr_choices[rng.uniform_int(cfg.snr_choices.size())];
    s.tir_db = cfg.tir_choices[rng.uniform_int(cfg.tir_choices.size())];
    scenes.push_back(std::move(s));
  }
  return scenes;
}

}  // namespace avsep::sim
