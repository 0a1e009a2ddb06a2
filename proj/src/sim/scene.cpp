#include "avsep/sim/scene.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "avsep/kern/fft.hpp"
#include "avsep/kern/kernels.hpp"
#include "avsep/sim/sources.hpp"
#include "avsep/util/rng.hpp"

namespace avsep::sim {
namespace {

constexpr double kFs = 16000.0;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

signal::Waveform synth_source(const SourceSpec& src, double seconds,
                              std::uint64_t voice_pool_seed) {
  if (src.speaker_id >= 0)
    return synth_speech(make_speaker(src.speaker_id, voice_pool_seed), seconds, src.seed);
  if (src.noise_id >= 0) return synth_noise(src.noise_id, seconds, src.seed);
  throw std::invalid_argument("render_scene: source has neither speaker nor noise id");
}

void validate_placement(const SceneSpec& spec, const SourceSpec& src) {
  if (!spec.room.contains(src.position))
    throw std::invalid_argument("render_scene: source outside room");
  const double dist = (src.position - spec.array.center).norm();
  if (dist < 0.5 || dist > 6.0)
    throw std::invalid_argument("render_scene: source distance outside [0.5, 6] m");
}

// Convolve one dry source with its nine RIRs, sharing the forward FFT of
// the source across mics. Output trimmed to n samples.
signal::MultiWaveform convolve_array(const std::vector<double>& dry,
                                     const std::vector<Rir>& rirs, std::size_t n) {
  std::size_t max_taps = 0;
  for (const auto& r : rirs) max_taps = std::max(max_taps, r.taps.size());
  const std::size_t nfft = kern::next_pow2(dry.size() + max_taps);
  kern::Fft fft(nfft);
  std::vector<std::complex<double>> src_f(nfft);
  for (std::size_t i = 0; i < dry.size(); ++i) src_f[i] = dry[i];
  fft.forward(src_f.data());

  signal::MultiWaveform out(rirs.size());
  std::vector<std::complex<double>> work(nfft);
  for (std::size_t m = 0; m < rirs.size(); ++m) {
    std::fill(work.begin(), work.end(), std::complex<double>{});
    for (std::size_t i = 0; i < rirs[m].taps.size(); ++i) work[i] = rirs[m].taps[i];
    fft.forward(work.data());
    kern::cmul(reinterpret_cast<const double*>(work.data()),
               reinterpret_cast<const double*>(src_f.data()),
               reinterpret_cast<double*>(work.data()), nfft);
    fft.inverse(work.data());
    out[m].samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) out[m].samples[i] = work[i].real();
  }
  return out;
}

std::vector<Rir> array_rirs(const SceneSpec& spec, const Vec3& src_pos) {
  std::vector<Rir> rirs(ArrayGeometry::kNumMics);
  for (int m = 0; m < ArrayGeometry::kNumMics; ++m)
    rirs[m] = generate_rir(spec.room, src_pos, spec.array.mic_position(m));
  return rirs;
}

struct RenderState {
  RenderedComponents comps;
  signal::Waveform anechoic;
  signal::Waveform target_dry;
  std::vector<signal::Waveform> interferer_dry;
  Rir target_rir0;
  double g_int = 0.0;
  double g_noise = 0.0;
};

RenderState render_core(const SceneSpec& spec) {
  if (spec.interferers.size() > 2)
    throw std::invalid_argument("render_scene: at most two interferers");
  validate_placement(spec, spec.target);
  for (const auto& s : spec.interferers) validate_placement(spec, s);
  if (spec.noise) validate_placement(spec, *spec.noise);

  const std::size_t n = static_cast<std::size_t>(spec.duration_s * kFs);
  RenderState st;

  st.target_dry = synth_source(spec.target, spec.duration_s, spec.voice_pool_seed);
  if (st.target_dry.energy() <= 0.0)
    throw std::invalid_argument("render_scene: silent target, SNR/TIR undefined");
  auto rirs_t = array_rirs(spec, spec.target.position);
  st.target_rir0 = rirs_t[0];
  st.comps.target = convolve_array(st.target_dry.samples, rirs_t, n);

  {
    const Rir direct = rirs_t[0].direct_part();
    auto v = kern::fft_convolve(st.target_dry.samples, direct.taps);
    v.resize(n, 0.0);
    st.anechoic = signal::Waveform(std::move(v));
  }

  st.comps.interference.assign(ArrayGeometry::kNumMics,
                               signal::Waveform(std::vector<double>(n, 0.0)));
  if (!spec.interferers.empty()) {
    std::vector<signal::Waveform> per_src_ch0;
    for (const auto& isrc : spec.interferers) {
      signal::Waveform dry = synth_source(isrc, spec.duration_s, spec.voice_pool_seed);
      auto chans = convolve_array(dry.samples, array_rirs(spec, isrc.position), n);
      per_src_ch0.push_back(chans[0]);
      for (int m = 0; m < ArrayGeometry::kNumMics; ++m)
        kern::vadd(st.comps.interference[m].samples.data(), chans[m].samples.data(),
                   st.comps.interference[m].samples.data(), n);
      st.interferer_dry.push_back(std::move(dry));
    }
    st.g_int = scale_to_tir(st.comps.target[0], per_src_ch0, spec.tir_db);
    for (auto& ch : st.comps.interference) kern::scale(st.g_int, ch.samples.data(), n);
  }

  st.comps.noise.assign(ArrayGeometry::kNumMics,
                        signal::Waveform(std::vector<double>(n, 0.0)));
  if (spec.noise) {
    const signal::Waveform dry = synth_source(*spec.noise, spec.duration_s, spec.voice_pool_seed);
    auto chans = convolve_array(dry.samples, array_rirs(spec, spec.noise->position), n);
    st.g_noise = scale_to_snr(st.comps.target[0], chans[0], spec.snr_db);
    for (int m = 0; m < ArrayGeometry::kNumMics; ++m) {
      kern::scale(st.g_noise, chans[m].samples.data(), n);
      st.comps.noise[m] = std::move(chans[m]);
    }
  }
  return st;
}

}  // namespace

double scale_to_snr(const signal::Waveform& target, const signal::Waveform& noise,
                    double snr_db) {
  const double et = target.energy();
  const double en = noise.energy();
  if (et <= 0.0 || en <= 0.0)
    throw std::invalid_argument("scale_to_snr: zero-energy operand");
  return std::sqrt(et / (en * std::pow(10.0, snr_db / 10.0)));
}

double scale_to_tir(const signal::Waveform& target,
                    const std::vector<signal::Waveform>& interferers, double tir_db) {
  if (interferers.empty()) throw std::invalid_argument("scale_to_tir: no interferers");
  std::vector<double> sum(target.size(), 0.0);
  for (const auto& s : interferers) {
    if (s.size() != target.size())
      throw std::invalid_argument("scale_to_tir: length mismatch");
    kern::vadd(sum.data(), s.samples.data(), sum.data(), sum.size());
  }
  const double et = target.energy();
  const double ei = kern::sum_sq(sum.data(), sum.size());
  if (et <= 0.0 || ei <= 0.0)
    throw std::invalid_argument("scale_to_tir: zero-energy operand");
  return std::sqrt(et / (ei * std::pow(10.0, tir_db / 10.0)));
}

RenderedComponents render_components(const SceneSpec& spec) {
  return render_core(spec).comps;
}

MixtureBundle render_scene(const SceneSpec& spec) {
  RenderState st = render_core(spec);
  const std::size_t n = st.comps.target[0].size();

  MixtureBundle b;
  b.mixture.resize(ArrayGeometry::kNumMics);
  for (int m = 0; m < ArrayGeometry::kNumMics; ++m) {
    b.mixture[m].samples.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      b.mixture[m].samples[i] = st.comps.target[m].samples[i] +
                                st.comps.interference[m].samples[i] +
                                st.comps.noise[m].samples[i];
  }
  b.reverb_target = st.comps.target[0];
  b.anechoic_target = std::move(st.anechoic);
  b.reverb_interference = st.comps.interference[0];
  b.reverb_noise = st.comps.noise[0];
  b.target_dry = std::move(st.target_dry);
  b.interferer_dry = std::move(st.interferer_dry);

  SceneMetadata& meta = b.meta;
  meta.t60 = spec.room.t60;
  meta.seed = spec.seed;
  meta.n_speakers = 1 + static_cast<int>(spec.interferers.size());
  meta.drr_db = compute_drr(st.target_rir0);
  meta.doa_target_rad = doa_from_position(spec.target.position, spec.array);
  for (const auto& isrc : spec.interferers)
    meta.doa_interferers_rad.push_back(doa_from_position(isrc.position, spec.array));

  const double et = b.reverb_target.energy();
  meta.realized_snr_db =
      spec.noise ? 10.0 * std::log10(et / b.reverb_noise.energy()) : kNan;
  meta.realized_tir_db =
      !spec.interferers.empty()
          ? 10.0 * std::log10(et / b.reverb_interference.energy())
          : kNan;
  meta.min_angle_deg =
      !spec.interferers.empty()
          ? min_interferer_angle(meta.doa_target_rad, meta.doa_interferers_rad) * 180.0 /
                std::numbers::pi
          : kNan;
  return b;
}

}  // namespace avsep::sim
