#include "avsep/sim/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace avsep::sim {

double doa_from_position(const Vec3& src, const ArrayGeometry& array) {
  Vec3 v = src - array.center;
  v.z = 0.0;  // project to the horizontal plane of the array
  const double n = v.norm();
  if (n < 1e-12) throw std::invalid_argument("doa_from_position: source at array center");
  const double cosang = std::clamp(v.dot(array.axis) / n, -1.0, 1.0);
  return std::acos(cosang);
}

double doa_from_pixel(double x_center, double frame_width) {
  if (frame_width <= 0.0) throw std::invalid_argument("doa_from_pixel: bad frame width");
  if (x_center < 0.0 || x_center > frame_width)
    throw std::invalid_argument("doa_from_pixel: pixel outside frame");
  return std::numbers::pi * x_center / frame_width;
}

double min_interferer_angle(double target_doa, const std::vector<double>& interferer_doas) {
  if (interferer_doas.empty())
    throw std::invalid_argument("min_interferer_angle: no interferers");
  double best = std::numeric_limits<double>::infinity();
  for (const double d : interferer_doas) best = std::min(best, std::abs(d - target_doa));
  return best;
}

}  // namespace avsep::sim
