#pragma once

#include <cstdint>

#include "avsep/signal/waveform.hpp"

namespace avsep::sim {

// A synthetic "speaker": a fixed f0 range plus modulation statistics.
// Utterances are amplitude-modulated multi-harmonic tones with a drifting
// f0 trajectory, syllabic envelope, pauses and a low breath-noise floor —
// cheap stand-ins for speech that still carry per-speaker structure.
struct SpeakerVoice {
  int id = 0;
  double f0_lo = 100.0;
  double f0_hi = 180.0;
  double syllable_rate_hz = 4.0;   // envelope modulation rate
  double pause_fraction = 0.15;    // expected fraction of silence
  double tilt_db_per_octave = -6.0;
  double formant1_hz = 600.0;      // two crude resonance bumps
  double formant2_hz = 1800.0;
  double breath_level = 0.02;      // relative noise floor
};

// Deterministically derive a voice from its id.
SpeakerVoice make_speaker(int id, std::uint64_t pool_seed);

signal::Waveform synth_speech(const SpeakerVoice& voice, double seconds, std::uint64_t seed);

enum class NoiseKind { kWhite = 0, kPink = 1, kBrown = 2 };

// Seeded colored-noise source; noise_id selects the kind and a per-id
// spectral tilt so distinct ids are distinguishable.
signal::Waveform synth_noise(int noise_id, double seconds, std::uint64_t seed);

}  // namespace avsep::sim
