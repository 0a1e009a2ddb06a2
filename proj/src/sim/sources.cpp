#include "avsep/sim/sources.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "avsep/util/rng.hpp"

namespace avsep::sim {
namespace {

constexpr double kFs = 16000.0;

double formant_gain(double f, const SpeakerVoice& v) {
  auto bump = [](double f, double fc, double bw) {
    const double d = (f - fc) / bw;
    return std::exp(-0.5 * d * d);
  };
  const double tilt = std::pow(2.0, v.tilt_db_per_octave / 6.0 *
                                        std::log2(std::max(f, 100.0) / 100.0) * 0.5);
  return tilt * (0.4 + bump(f, v.formant1_hz, 200.0) + 0.7 * bump(f, v.formant2_hz, 350.0));
}

}  // namespace

SpeakerVoice make_speaker(int id, std::uint64_t pool_seed) {
  util::Rng rng(util::hash_seed(pool_seed, "speaker", static_cast<std::uint64_t>(id)));
  SpeakerVoice v;
  v.id = id;
  v.f0_lo = rng.uniform(85.0, 220.0);
  v.f0_hi = v.f0_lo * rng.uniform(1.25, 1.6);
  v.syllable_rate_hz = rng.uniform(3.0, 7.0);
  v.pause_fraction = rng.uniform(0.08, 0.22);
  v.tilt_db_per_octave = rng.uniform(-9.0, -4.0);
  v.formant1_hz = rng.uniform(400.0, 900.0);
  v.formant2_hz = rng.uniform(1300.0, 2600.0);
  v.breath_level = rng.uniform(0.01, 0.04);
  return v;
}

signal::Waveform synth_speech(const SpeakerVoice& voice, double seconds, std::uint64_t seed) {
  util::Rng rng(seed);
  const std::size_t n = static_cast<std::size_t>(seconds * kFs);
  signal::Waveform out(std::vector<double>(n, 0.0));

  // Slowly drifting f0 (random walk reflected into [f0_lo, f0_hi]).
  double f0 = rng.uniform(voice.f0_lo, voice.f0_hi);
  double f0_vel = 0.0;

  // Syllabic envelope state: alternating voiced bursts and short pauses.
  double env = 0.0;
  double env_target = 1.0;
  std::size_t segment_left = 0;
  bool voiced = true;

  constexpr int kMaxHarmonics = 40;
  double amp[kMaxHarmonics];
  double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  int n_harm = 0;

  const double env_smooth = 1.0 - std::exp(-1.0 / (0.012 * kFs));
  for (std::size_t i = 0; i < n; ++i) {
    if (segment_left == 0) {
      voiced = !voiced || rng.uniform() > voice.pause_fraction * 3.0;
      const double dur = voiced ? rng.uniform(0.12, 0.5) : rng.uniform(0.05, 0.25);
      segment_left = static_cast<std::size_t>(dur * kFs);
      env_target = voiced ? rng.uniform(0.6, 1.0) : 0.0;
      if (voiced) {
        n_harm = 0;
        for (int h = 1; h <= kMaxHarmonics; ++h) {
          const double f = h * 0.5 * (voice.f0_lo + voice.f0_hi);
          if (f > 6800.0) break;
          amp[n_harm++] = formant_gain(f, voice) / std::sqrt(static_cast<double>(h));
        }
      }
    }
    --segment_left;

    // f0 random walk, gently pulled back into range.
    f0_vel += rng.normal() * 0.02 - f0_vel * 0.001;
    f0 += f0_vel;
    if (f0 < voice.f0_lo) {
      f0 = voice.f0_lo;
      f0_vel = std::abs(f0_vel);
    } else if (f0 > voice.f0_hi) {
      f0 = voice.f0_hi;
      f0_vel = -std::abs(f0_vel);
    }

    env += (env_target - env) * env_smooth;
    const double syllable =
        0.55 + 0.45 * std::sin(2.0 * std::numbers::pi * voice.syllable_rate_hz * i / kFs +
                               phase * 0.1);

    phase += 2.0 * std::numbers::pi * f0 / kFs;
    if (phase > 2.0 * std::numbers::pi) phase -= 2.0 * std::numbers::pi;

    double s = 0.0;
    if (env > 1e-4 && n_harm > 0) {
      const std::complex<double> r(std::cos(phase), std::sin(phase));
      std::complex<double> p(1.0, 0.0);
      for (int h = 0; h < n_harm; ++h) {
        p *= r;
        s += amp[h] * p.imag();
      }
    }
    s *= 0.25 * env * syllable;
    s += voice.breath_level * rng.normal() * (0.3 + 0.7 * env);
    out.samples[i] = s;
  }
  return out;
}

signal::Waveform synth_noise(int noise_id, double seconds, std::uint64_t seed) {
  util::Rng rng(util::hash_seed(seed, "noise", static_cast<std::uint64_t>(noise_id)));
  const std::size_t n = static_cast<std::size_t>(seconds * kFs);
  signal::Waveform out(std::vector<double>(n, 0.0));
  const auto kind = static_cast<NoiseKind>(noise_id % 3);

  // Per-id tilt via a one-pole shelf so different ids stay distinguishable.
  const double shelf = rng.uniform(0.1, 0.5);
  double b0 = 0, b1 = 0, b2 = 0, brown = 0, lp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = rng.normal();
    double s = w;
    switch (kind) {
      case NoiseKind::kWhite:
        break;
      case NoiseKind::kPink:
        // Paul Kellet's economy pink filter.
        b0 = 0.99765 * b0 + w * 0.0990460;
        b1 = 0.96300 * b1 + w * 0.2965164;
        b2 = 0.57000 * b2 + w * 1.0526913;
        s = (b0 + b1 + b2 + w * 0.1848) * 0.25;
        break;
      case NoiseKind::kBrown:
        brown = 0.998 * brown + 0.05 * w;
        s = brown * 3.0;
        break;
    }
    lp += shelf * (s - lp);
    out.samples[i] = 0.5 * (s + lp);
  }
  return out;
}

}  // namespace avsep::sim
