#pragma once

#include <vector>

#include "tfss/reconstruct.hpp"
#include "tfss/types.hpp"
#include "tfss/window.hpp"

namespace tfss {

struct DetectionConfig {
  double band_low_hz = 0.0;
  double band_high_hz = 0.0;
  /// Threshold is this multiple of the mean saliency.
  double threshold_factor = 5.0;
  double min_separation_s = 10.0;
  /// Mask only the band rows of above-threshold columns instead of the
  /// whole column.
  bool band_limited_mask = false;

  void validate(double fs) const;
};

/// Detected impulse: absolute peak time, saliency at the peak, and the
/// waveform reconstructed from its above-threshold column run.
struct ImpulseEvent {
  double time = 0.0;
  double saliency = 0.0;
  SignalRecord waveform;
};

/// G[k] = sqrt( sum_{m in band} |S[m,k]|^2 domega ).
std::vector<double> saliency(const TfrGrid& S, double band_low_hz, double band_high_hz);

struct DetectionResult {
  std::vector<ImpulseEvent> events;
  TfrMask mask;           // columns with G > threshold
  std::vector<double> g;  // saliency series, one value per column
  double threshold = 0.0; // threshold_factor * mean(G)
};

/// Thresholds the saliency at threshold_factor * mean, picks separated
/// local maxima, and reconstructs each event from its own contiguous
/// above-threshold column run.
DetectionResult detect_impulses(const TfrGrid& S, const DetectionConfig& config,
                                const WindowSpec& spec);

}  // namespace tfss
