#pragma once

#include <cstdint>
#include <vector>

#include "tfss/stft.hpp"
#include "tfss/types.hpp"

namespace tfss {

/// Cells at or below gamma_rel * max|F| are excluded from reassignment and
/// squeezing; the operator ratios divide by F and are meaningless there.
inline constexpr double kDefaultGammaRel = 1e-6;

/// Per-cell reassignment operator fields aligned with a TfrGrid.
/// t_hat = Re(t_tilde) and omega_hat = Im(omega_tilde) wherever valid;
/// gated cells carry zeros and valid = 0.
struct ReassignFields {
  int fft_length = 0;
  int cols = 0;
  double fs = 1.0;
  double t0 = 0.0;
  std::vector<cplx> t_tilde;       // complex group delay, seconds
  std::vector<cplx> omega_tilde;   // complex instantaneous frequency, rad/s
  std::vector<double> t_hat;       // seconds
  std::vector<double> omega_hat;   // rad/s
  std::vector<std::uint8_t> valid;

  std::int64_t cells() const { return static_cast<std::int64_t>(fft_length) * cols; }
  std::size_t index(int r, int k) const { return static_cast<std::size_t>(r) * cols + k; }
  double omega_of_row(int r) const {
    return kTwoPi * (r - fft_length / 2 + 1) * fs / fft_length;
  }
  double time_of_col(int k) const { return static_cast<double>(k) / fs; }
};

struct OperatorSet {
  TfrGrid stft;  // base-window STFT
  ReassignFields fields;
};

/// Evaluates the h, Th and Dh transforms on one grid and forms the operator
/// ratios cellwise where |F| clears the gate.
OperatorSet compute_operators(const SignalRecord& x, const WindowSpec& spec,
                              int fft_length, double gamma_rel = kDefaultGammaRel);
ReassignFields compute_operator_fields(StftFamily& family,
                                       double gamma_rel = kDefaultGammaRel);

struct ReassignedSpectrogram {
  TfrGrid energy;               // real-valued energy map
  double input_energy = 0.0;    // sum |F|^2 over valid cells
  double retained_energy = 0.0; // energy whose target fell inside the grid
  std::int64_t dropped_cells = 0;
};

/// Accumulates |F|^2 at the nearest cell to (t_hat, omega_hat). Targets
/// outside the grid are dropped, not clamped; ties round toward the earlier
/// time / lower bin.
ReassignedSpectrogram reassigned_spectrogram(const TfrGrid& F, const ReassignFields& fields);

}  // namespace tfss
