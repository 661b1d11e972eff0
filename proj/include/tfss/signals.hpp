#pragma once

#include <cstdint>
#include <vector>

#include "tfss/synchro.hpp"
#include "tfss/types.hpp"

namespace tfss {

/// One additive component of a synthetic test signal. All frequencies in Hz.
struct ComponentSpec {
  enum class Kind { Impulse, Tone, LinearChirp, SinFm, GaussianChirp };

  Kind kind = Kind::Impulse;
  double amplitude = 1.0;
  double time = 0.0;                                  // impulse location, s
  double f0 = 0.0, f1 = 0.0;                          // tone / chirp endpoints
  double f_carrier = 0.0, f_dev = 0.0, f_mod = 0.0;   // sinusoidal FM
  double phase = 0.0;
  ChirpModel model;                                   // gaussian chirp

  static ComponentSpec impulse(double time_s, double amplitude);
  static ComponentSpec tone(double f_hz, double amplitude, double phase = 0.0);
  static ComponentSpec linear_chirp(double f0_hz, double f1_hz, double amplitude,
                                    double phase = 0.0);
  static ComponentSpec sin_fm(double carrier_hz, double deviation_hz, double rate_hz,
                              double amplitude, double phase = 0.0);
  static ComponentSpec gaussian_chirp(const ChirpModel& model, double amplitude = 1.0);
};

/// Real-valued mixture plus each component separately for oracle tests.
struct Synthesis {
  SignalRecord mixture;
  std::vector<SignalRecord> components;
};

Synthesis synthesize(const std::vector<ComponentSpec>& components, int length, double fs);

/// y = x + sigma w with seeded Gaussian white noise; sigma normalizes the
/// realized noise power so the requested SNR holds exactly for this draw.
SignalRecord add_noise(const SignalRecord& x, double snr_db, std::uint64_t seed);

inline constexpr double kRqfCapDb = 320.0;

/// RQF = 10 log10( sum |x|^2 / sum |x - xhat|^2 ), capped at kRqfCapDb.
double rqf_db(const SignalRecord& x, const SignalRecord& xhat);

/// The complex (analytic) log-quadratic chirp, or its real part.
SignalRecord chirp_model_record(const ChirpModel& model, int length, double fs,
                                bool analytic = true);

/// Fixed 500-sample corpus: two impulses, a sinusoid, a linear chirp and a
/// sinusoidally modulated sinusoid, laid out like the reference experiment.
Synthesis paper_corpus();

/// Two impulses plus a tone; the detection test corpus.
Synthesis two_impulse_tone_corpus();

/// One unit impulse in an otherwise empty record.
Synthesis single_impulse_corpus(int length, double fs, double time_s, double amplitude);

}  // namespace tfss
