#include "avsep/sim/rir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avsep/kern/kernels.hpp"

namespace avsep::sim {
namespace {

constexpr double kFs = 16000.0;
constexpr int kSincHalfWidth = 40;   // 81-tap interpolation
constexpr int kDirectGuard = 8;      // 0.5 ms between direct part and tail
constexpr double kExtraDecay = 0.25; // render a little past t60 for clean decay tails

double eyring_reflection(const RoomSpec& room) {
  const Vec3& d = room.dims;
  if (d.x <= 0 || d.y <= 0 || d.z <= 0)
    throw std::invalid_argument("generate_rir: nonpositive room dimensions");
  const double volume = d.x * d.y * d.z;
  const double surface = 2.0 * (d.x * d.y + d.x * d.z + d.y * d.z);
  const double absorption = 1.0 - std::exp(-0.161 * volume / (surface * room.t60));
  if (!(absorption > 0.0 && absorption < 1.0))
    throw std::invalid_argument("generate_rir: t60 incompatible with room size");
  return std::sqrt(1.0 - absorption);
}

// Accumulate amp * windowed_sinc(k - delay) into taps. One sin() per call;
// consecutive integer offsets only flip the sign of sin(pi*(k - delay)).
void add_fractional_pulse(std::vector<double>& taps, double delay, double amp) {
  const long k0 = std::max<long>(0, static_cast<long>(std::ceil(delay - kSincHalfWidth)));
  const long k1 =
      std::min<long>(static_cast<long>(taps.size()) - 1,
                     static_cast<long>(std::floor(delay + kSincHalfWidth)));
  if (k1 < k0) return;

  const double frac = delay - std::floor(delay);
  const long base = static_cast<long>(std::floor(delay));
  // sin(pi*(k - delay)) = (-1)^(k - base) * (-sin(pi*frac)) for integer k.
  const double sin_pf = std::sin(std::numbers::pi * frac);
  double sign = ((k0 - base) % 2 == 0) ? -1.0 : 1.0;

  // Hann window over [-HW, HW], advanced by a stable rotor recurrence.
  const double dphi = std::numbers::pi / kSincHalfWidth;
  double wc = std::cos((k0 - delay) * dphi);
  double ws = std::sin((k0 - delay) * dphi);
  const double rc = std::cos(dphi), rs = std::sin(dphi);

  for (long k = k0; k <= k1; ++k) {
    const double t = static_cast<double>(k) - delay;
    double sinc;
    if (std::abs(t) < 1e-9) {
      sinc = 1.0;
    } else {
      sinc = sign * sin_pf / (std::numbers::pi * t);
    }
    taps[static_cast<std::size_t>(k)] += amp * sinc * 0.5 * (1.0 + wc);
    sign = -sign;
    const double nwc = wc * rc - ws * rs;
    ws = ws * rc + wc * rs;
    wc = nwc;
  }
}

}  // namespace

Rir Rir::direct_part() const {
  Rir out;
  out.direct_index = direct_index;
  const std::size_t n = std::min(taps.size(), direct_index + 1);
  out.taps.assign(taps.begin(), taps.begin() + n);
  return out;
}

Rir generate_rir(const RoomSpec& room, const Vec3& src, const Vec3& mic) {
  if (!room.contains(src) || !room.contains(mic))
    throw std::invalid_argument("generate_rir: source or mic outside the room");
  const bool anechoic = room.t60 == 0.0;
  if (!anechoic && room.t60 < 0.05)
    throw std::invalid_argument("generate_rir: t60 below 0.05 s (use 0 for anechoic)");

  const double c = room.speed_of_sound;
  const double direct_dist = (src - mic).norm();
  const double direct_delay = direct_dist / c * kFs;

  Rir out;
  out.direct_index = static_cast<std::size_t>(std::llround(direct_delay)) + kDirectGuard;

  if (anechoic) {
    out.taps.assign(static_cast<std::size_t>(std::ceil(direct_delay)) + kSincHalfWidth + 1, 0.0);
    add_fractional_pulse(out.taps, direct_delay, 1.0 / (4.0 * std::numbers::pi * direct_dist));
    return out;
  }

  const double beta = eyring_reflection(room);
  const std::size_t len = static_cast<std::size_t>(
      std::ceil((room.t60 * (1.0 + kExtraDecay)) * kFs + direct_delay) + kSincHalfWidth + 1);
  out.taps.assign(len, 0.0);
  const double radius = static_cast<double>(len + kSincHalfWidth) / kFs * c;

  struct AxisImage {
    double coord;
    int reflections;
  };
  auto axis_images = [&](double s, double L) {
    std::vector<AxisImage> v;
    const int n_max = static_cast<int>(std::ceil(radius / (2.0 * L))) + 1;
    for (int n = -n_max; n <= n_max; ++n) {
      for (int u = 0; u <= 1; ++u) {
        v.push_back({(1 - 2 * u) * s + 2.0 * n * L, std::abs(n - u) + std::abs(n)});
      }
    }
    return v;
  };
  const auto xs = axis_images(src.x, room.dims.x);
  const auto ys = axis_images(src.y, room.dims.y);
  const auto zs = axis_images(src.z, room.dims.z);

  // Powers of beta, precomputed up to the largest possible order.
  const double min_dim = std::min({room.dims.x, room.dims.y, room.dims.z});
  const int max_order =
      3 * (2 * (static_cast<int>(std::ceil(radius / (2.0 * min_dim))) + 1) + 1);
  std::vector<double> beta_pow(max_order + 8);
  beta_pow[0] = 1.0;
  for (std::size_t i = 1; i < beta_pow.size(); ++i) beta_pow[i] = beta_pow[i - 1] * beta;

  const double radius_sq = radius * radius;
  for (const auto& ix : xs) {
    const double dx = ix.coord - mic.x;
    const double dx2 = dx * dx;
    if (dx2 > radius_sq) continue;
    for (const auto& iy : ys) {
      const double dy = iy.coord - mic.y;
      const double dxy2 = dx2 + dy * dy;
      if (dxy2 > radius_sq) continue;
      const int rxy = ix.reflections + iy.reflections;
      for (const auto& iz : zs) {
        const double dz = iz.coord - mic.z;
        const double dist_sq = dxy2 + dz * dz;
        if (dist_sq > radius_sq) continue;
        const double dist = std::sqrt(dist_sq);
        const double delay = dist / c * kFs;
        const double amp =
            beta_pow[static_cast<std::size_t>(rxy + iz.reflections)] /
            (4.0 * std::numbers::pi * std::max(dist, 1e-2));
        add_fractional_pulse(out.taps, delay, amp);
      }
    }
  }
  return out;
}

double compute_drr(const Rir& rir) {
  const double total = kern::sum_sq(rir.taps.data(), rir.taps.size());
  if (total <= 0.0) throw std::invalid_argument("compute_drr: all-zero RIR");
  const std::size_t split = std::min(rir.taps.size(), rir.direct_index + 1);
  const double direct = kern::sum_sq(rir.taps.data(), split);
  const double tail = kern::sum_sq(rir.taps.data() + split, rir.taps.size() - split);
  if (tail < 1e-12 * direct) return 80.0;
  return std::min(80.0, 10.0 * std::log10(direct / tail));
}

double schroeder_t60(const Rir& rir, double fs) {
  const std::size_t n = rir.taps.size();
  if (n == 0) throw std::invalid_argument("schroeder_t60: empty RIR");
  // Backward energy integral.
  std::vector<double> edc(n);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    acc += rir.taps[i] * rir.taps[i];
    edc[i] = acc;
  }
  if (acc <= 0.0) throw std::invalid_argument("schroeder_t60: all-zero RIR");
  const double full = edc[0];
  // Collect (time, dB) points between -5 and -25 dB and fit a line.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double db = 10.0 * std::log10(edc[i] / full + 1e-300);
    if (db > -5.0) continue;
    if (db < -25.0) break;
    const double t = static_cast<double>(i) / fs;
    sx += t;
    sy += db;
    sxx += t * t;
    sxy += t * db;
    ++count;
  }
  if (count < 8) throw std::runtime_error("schroeder_t60: decay range too short to fit");
  const double denom = count * sxx - sx * sx;
  if (std::abs(denom) < 1e-30) throw std::runtime_error("schroeder_t60: degenerate fit");
  const double slope = (count * sxy - sx * sy) / denom;  // dB per second
  if (slope >= 0.0) throw std::runtime_error("schroeder_t60: nondecaying curve");
  return -60.0 / slope;
}

}  // namespace avsep::sim
