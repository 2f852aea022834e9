#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbsense/types.hpp"

namespace mbsense::channel {

// One multipath component. `power` is derived from `amplitude` at
// construction so the two can never disagree.
struct Path {
  double amplitude = 0.0;      // linear voltage gain, >= 0
  double phase_rad = 0.0;      // [0, 2*pi)
  double delay_s = 0.0;        // >= 0
  double azimuth_tx_rad = 0.0; // departure azimuth
  double azimuth_rx_rad = 0.0; // arrival azimuth
  double power = 0.0;          // amplitude^2

  Path() = default;
  Path(double amp, double phase, double delay, double az_tx, double az_rx);
};

// Per-field Gaussian jitter applied to a scene's paths for each snapshot.
// Power is not jittered directly; it follows the jittered amplitude.
struct JitterSpec {
  double amplitude_rel_std = 0.0;  // multiplicative, amp *= max(0, 1 + N(0, s))
  double phase_rad_std = 0.0;
  double delay_s_std = 0.0;
  double azimuth_rad_std = 0.0;
};

// Fixed scatterer layout for one fingerprint class.
struct Scene {
  std::vector<Path> paths;
  int class_label = 0;
  JitterSpec jitter;

  Scene() = default;
  Scene(std::vector<Path> p, int label, JitterSpec j);
};

// Directional probing pattern: tabulated tx/rx gains over a shared azimuth grid.
struct BeamPattern {
  VectorXd azimuth_grid_rad;  // uniform, ascending
  VectorXd tx_gain;           // >= 0, same length as grid
  VectorXd rx_gain;           // >= 0
  int beam_index = 0;
};

// Complex channel frequency response over spatial streams x subcarriers,
// kept in polar form: phase-only calibration and impairment injection then
// leave magnitudes untouched bit for bit.
struct CsiFrame {
  MatrixXd amplitude;           // N_s x M_s, >= 0
  MatrixXd phase;               // N_s x M_s, radians (not wrapped)
  VectorXd subcarrier_freqs_hz; // length M_s, strictly increasing
  BoolArray guard_mask;         // length M_s, true = guard (zero amplitude)

  Eigen::Index streams() const { return amplitude.rows(); }
  Eigen::Index subcarriers() const { return amplitude.cols(); }
  MatrixXcd values() const;  // amplitude .* exp(j*phase)

  static CsiFrame from_values(const MatrixXcd& values, VectorXd freqs_hz, BoolArray guard_mask);
};

// M nonnegative beam-quality scalars. Values are linear SNR as produced by
// compute_beam_snr; after quantization they are dB multiples of 0.25.
struct BeamSnrVector {
  VectorXd values;
  bool quantized = false;
};

struct ImpairmentConfig {
  double agc_gain_db_std = 0.0;
  double sfo_slope_rad_per_subcarrier_std = 0.0;
  double pbd_offset_rad_std = 0.0;
  double cfo_drift_rad_per_frame_std = 0.0;
  VectorXd rf_chain_phase_offsets_rad;  // length N_s; empty = all zero
  bool bsnr_quantize = false;
  double noise_var = 1.0;  // > 0
};

enum class SplitTag { kTrain, kVal, kTest };
std::string to_string(SplitTag tag);
SplitTag split_tag_from_string(const std::string& s);

// Index-aligned CSI / beam-SNR sample pairs. labels[i] == -1 marks an
// unlabeled sample.
struct Dataset {
  std::vector<CsiFrame> csi_samples;
  std::vector<BeamSnrVector> bsnr_samples;
  std::vector<int> labels;
  SplitTag split_tag = SplitTag::kTrain;
  std::uint64_t seed = 0;
  int num_classes = 0;

  std::size_t size() const { return csi_samples.size(); }
};

// Counters for soft error conditions that do not abort a simulation.
struct SimWarnings {
  std::int64_t azimuth_clamped = 0;
  std::int64_t zero_voltage_rssi = 0;
};

// Static radio description shared by every snapshot of an experiment.
struct RadioConfig {
  int n_streams = 3;
  VectorXd subcarrier_freqs_hz;
  BoolArray guard_mask;
  std::vector<BeamPattern> patterns;
  double noise_var = 1e-3;
  // half-wavelength array spacing used to differentiate spatial streams
  double stream_spacing_wavelengths = 0.5;
};

// Superposition of all multipath voltages at one instant.
std::complex<double> simulate_baseband_voltage(std::span<const Path> paths);

// Received power in dB; zero voltage yields -inf and bumps the warning counter.
double compute_rssi(std::complex<double> voltage, SimWarnings* warnings = nullptr);

// CFR sampled at the given subcarrier frequencies:
//   H(f_k) = sum_i a_i * exp(-j*theta_i) * exp(-j*2*pi*f_k*tau_i)
// stream_index only validates range here; stream diversity is injected by the
// dataset generator through per-stream path transforms.
VectorXcd sample_cfr(std::span<const Path> paths, const VectorXd& subcarrier_freqs_hz,
                     int stream_index);

// h_m = (1/sigma^2) * sum_i txgain_m(theta_i) * rxgain_m(psi_i) * P_i with
// nearest-grid-point gain lookup; out-of-grid azimuths clamp to the edge.
BeamSnrVector compute_beam_snr(std::span<const Path> paths,
                               std::span<const BeamPattern> patterns, double noise_var,
                               SimWarnings* warnings = nullptr);

// Applies AGC amplitude scaling, SFO slope, PBD offset, CFO drift * frame_index
// and per-stream RF-chain offsets to the CSI, and optional 0.25 dB quantization
// to the beam SNRs. Packet-level draws come from rng_seed; the CFO drift comes
// from session_seed (defaults to rng_seed) so it is constant within a session.
std::pair<CsiFrame, BeamSnrVector> apply_impairments(const CsiFrame& frame,
                                                     const BeamSnrVector& bsnr,
                                                     const ImpairmentConfig& cfg,
                                                     std::uint64_t rng_seed,
                                                     std::int64_t frame_index = 0,
                                                     std::optional<std::uint64_t> session_seed = {});

// Jitters each scene per snapshot, evaluates the CFR for every spatial stream
// and the beam SNRs, and applies impairments. Labels are attached to the first
// ceil(labeled_fraction * count) snapshots of each class. Pure in (args, seed).
Dataset generate_dataset(std::span<const Scene> scenes, int snapshots_per_class,
                         const RadioConfig& radio, const ImpairmentConfig& impairments,
                         double labeled_fraction, std::uint64_t seed,
                         SplitTag split_tag = SplitTag::kTrain);

// ---- scenario synthesis helpers -------------------------------------------

// 802.11ac-style grid: `count` subcarriers centered on center_hz spanning
// bandwidth_hz, with guard_count guards split between the band edges.
void make_subcarrier_grid(double center_hz, double bandwidth_hz, int count, int guard_count,
                          VectorXd& freqs_hz, BoolArray& guard_mask);

// M probing patterns over a uniform azimuth grid: an irregular directional
// main lobe per beam on the tx side, quasi-omni with mild ripple on rx.
std::vector<BeamPattern> make_beam_patterns(int beam_count, double grid_step_deg,
                                            std::uint64_t seed);

struct SceneLayoutConfig {
  int num_classes = 8;
  int paths_per_class = 6;  // scatterer bounces; a direct path is added on top
  double tx_rx_distance_m = 2.5;
  double room_half_extent_m = 4.0;
  double carrier_hz = 5.18e9;
  JitterSpec jitter;
};

// One fixed scatterer layout per class: positions drawn per class seed, turned
// into delays/azimuths/amplitudes by free-space geometry.
std::vector<Scene> make_scene_classes(const SceneLayoutConfig& cfg, std::uint64_t scene_seed);

}  // namespace mbsense::channel
