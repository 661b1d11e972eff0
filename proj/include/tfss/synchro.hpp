#pragma once

#include <cstdint>
#include <vector>

#include "tfss/reassign.hpp"
#include "tfss/stft.hpp"
#include "tfss/types.hpp"

namespace tfss {

/// Log-quadratic chirp x(t) = e^{lambda(t) + j phi(t)} with
///   lambda(t) = log_amp + mu t + nu t^2/2,  phi(t) = phase + omega0 t + alpha t^2/2.
/// The complex pair p = mu + j omega0, q = nu + j alpha drives the
/// second-order estimators.
struct ChirpModel {
  double log_amp = 0.0;
  double mu = 0.0;      // amplitude slope, 1/s
  double nu = 0.0;      // amplitude curvature, 1/s^2
  double phase = 0.0;   // rad
  double omega0 = 0.0;  // rad/s
  double alpha = 0.0;   // chirp rate, rad/s^2

  cplx p() const { return {mu, omega0}; }
  cplx q() const { return {nu, alpha}; }
  cplx value(double t) const;
  double instantaneous_frequency(double t) const { return omega0 + alpha * t; }
  /// Time where the instantaneous frequency curve crosses omega.
  double crossing_time(double omega) const { return (omega - omega0) / alpha; }
};

enum class EstimatorFamily : std::uint8_t {
  TimeDerivatives,       // (tn): n-th time derivatives of the window
  FrequencyDerivatives,  // (wn): time-weighted windows
};

struct EstimatorChoice {
  EstimatorFamily family = EstimatorFamily::FrequencyDerivatives;
  int order = 2;
  /// |alpha_hat| at or below this falls back to the first-order operator;
  /// negative selects default_alpha_gate(fs, M).
  double alpha_gate = -1.0;
  /// Optional 3x3 componentwise median filter on the raw q field.
  bool median_smooth = false;
};

/// One hundredth of a bin-per-sample slope.
double default_alpha_gate(double fs, int fft_length);

/// Cellwise chirp-rate / amplitude-curvature estimate q_hat = nu + j alpha.
/// Cells whose denominator cancels (or that fail the magnitude gate) are
/// flagged invalid and carry q = 0.
struct ModulationField {
  int fft_length = 0;
  int cols = 0;
  std::vector<cplx> q;
  std::vector<std::uint8_t> valid;
};

ModulationField estimate_modulation(StftFamily& family, const EstimatorChoice& choice,
                                    double gamma_rel = kDefaultGammaRel);
ModulationField estimate_modulation(const SignalRecord& x, const WindowSpec& spec,
                                    int fft_length, const EstimatorChoice& choice,
                                    double gamma_rel = kDefaultGammaRel);

/// Both second-order group-delay estimators, cellwise:
///   t2  = (omega - omega_hat + Im(q t_tilde)) / alpha_hat   (enhanced)
///   t2b = t_hat + (omega - omega_hat) / alpha_hat           (biased when nu != 0)
/// Where |alpha_hat| is at or below the gate both fall back to t_hat.
struct GroupDelayFields {
  std::vector<double> t2;
  std::vector<double> t2b;
};

GroupDelayFields group_delay_second_order(const ReassignFields& fields,
                                          const ModulationField& q,
                                          const EstimatorChoice& choice);

/// omega2 = omega_hat - Im(q t_tilde) + alpha_hat * t, falling back to
/// omega_hat below the gate; the vertical counterpart of t2.
std::vector<double> instantaneous_frequency_second_order(const ReassignFields& fields,
                                                         const ModulationField& q,
                                                         const EstimatorChoice& choice);

struct SqueezedGrid {
  TfrGrid grid;
  std::int64_t dropped_cells = 0;  // valid cells whose target left the grid
  double dropped_energy = 0.0;     // their summed |F|^2
};

/// Horizontal (time-reassigned) synchrosqueezing: complex values of each
/// frequency row are summed into the column nearest t_field. Gated cells
/// pass through unmoved so the row marginals, and with them the exact
/// inversion, are preserved; out-of-grid targets are dropped and counted.
SqueezedGrid tsst(const TfrGrid& F, const std::vector<double>& t_field,
                  const std::vector<std::uint8_t>& valid, GridKind kind);

/// Vertical synchrosqueezing: columnwise accumulation along frequency at
/// the nearest bin to omega_field, same gating and drop rules.
SqueezedGrid vertical_sst(const TfrGrid& F, const std::vector<double>& omega_field,
                          const std::vector<std::uint8_t>& valid, GridKind kind);

}  // namespace tfss
