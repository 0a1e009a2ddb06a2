#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace avsep::sim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Nine-element nonuniform linear array, symmetric about its center, with
// the camera co-located at the center. Mics are numbered 0..8 from the
// negative axis end; the default spacings realize five distinct pair
// distances for (0,8), (0,4), (1,4), (4,6), (4,5):
// 0.24, 0.12, 0.08, 0.05 and 0.03 m.
struct ArrayGeometry {
  static constexpr int kNumMics = 9;

  std::array<double, kNumMics> axial{-0.12, -0.08, -0.05, -0.03, 0.0,
                                     0.03,  0.05,  0.08,  0.12};
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 axis{1.0, 0.0, 0.0};  // unit vector toward mic 8, horizontal

  Vec3 mic_position(int m) const { return center + axis * axial[m]; }
  double half_length() const { return axial[kNumMics - 1]; }
};

// Angle in [0, pi] between the array axis and the source direction,
// projected to the horizontal plane. Throws if the source sits on the
// array center.
double doa_from_position(const Vec3& src, const ArrayGeometry& array);

// Linear pixel-to-angle map for the 180-degree camera: theta = pi * x / W.
double doa_from_pixel(double x_center, double frame_width);

// Smallest absolute DOA difference between the target and any interferer.
double min_interferer_angle(double target_doa, const std::vector<double>& interferer_doas);

}  // namespace avsep::sim
