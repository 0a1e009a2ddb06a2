#pragma once

#include <cstddef>
#include <vector>

#include "avsep/sim/geometry.hpp"

namespace avsep::sim {

inline constexpr double kSpeedOfSound = 343.0;

// Shoebox room. t60 == 0 selects the anechoic (direct-path-only) case used
// for ground-truth references; reverberant rooms require t60 >= 0.05 s.
struct RoomSpec {
  Vec3 dims{6.0, 5.0, 4.0};
  double t60 = 0.3;
  double speed_of_sound = kSpeedOfSound;

  bool contains(const Vec3& p, double margin = 0.0) const {
    return p.x > margin && p.x < dims.x - margin && p.y > margin && p.y < dims.y - margin &&
           p.z > margin && p.z < dims.z - margin;
  }
};

struct Rir {
  std::vector<double> taps;
  std::size_t direct_index = 0;  // k_d: geometric arrival + 8-sample guard

  // Direct-path-only truncation (taps 0..k_d), the anechoic reference path.
  Rir direct_part() const;
};

// Image-method RIR at 16 kHz with fractional-delay windowed-sinc
// interpolation (81 taps) and a uniform wall reflection coefficient derived
// from t60 via Eyring's formula.
Rir generate_rir(const RoomSpec& room, const Vec3& src, const Vec3& mic);

// Eq.-style direct-to-reverberant ratio split at the stored k_d, in dB,
// capped at +80 when the tail is empty.
double compute_drr(const Rir& rir);

// Reverberation time measured from the Schroeder backward integral, fit on
// the -5..-25 dB span of the decay curve. Independent route used to verify
// generated RIRs against the requested t60.
double schroeder_t60(const Rir& rir, double fs = 16000.0);

}  // namespace avsep::sim
