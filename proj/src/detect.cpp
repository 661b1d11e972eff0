#include "tfss/detect.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tfss/parallel.hpp"

namespace tfss {

void DetectionConfig::validate(double fs) const {
  if (band_low_hz < 0.0 || band_low_hz >= band_high_hz || band_high_hz > fs / 2.0)
    throw std::invalid_argument("detection band must satisfy 0 <= lo < hi <= fs/2");
  if (threshold_factor <= 0.0)
    throw std::invalid_argument("threshold factor must be positive");
  if (min_separation_s < 0.0)
    throw std::invalid_argument("minimum separation must be nonnegative");
}

namespace {

struct BandRows {
  int first = 0;  // inclusive row range
  int last = -1;
};

BandRows band_rows(const TfrGrid& S, double lo_hz, double hi_hz) {
  // Bin m sits at m * fs / M Hz; keep the bins whose center lies in band.
  const double bins_per_hz = S.fft_length / S.fs;
  const int m_lo = static_cast<int>(std::ceil(lo_hz * bins_per_hz - 1e-9));
  const int m_hi = static_cast<int>(std::floor(hi_hz * bins_per_hz + 1e-9));
  const int lo = std::max(m_lo, S.min_bin());
  const int hi = std::min(m_hi, S.max_bin());
  if (lo > hi) throw std::invalid_argument("empty band");
  return {S.row_of_bin(lo), S.row_of_bin(hi)};
}

}  // namespace

std::vector<double> saliency(const TfrGrid& S, double band_low_hz, double band_high_hz) {
  const BandRows rows = band_rows(S, band_low_hz, band_high_hz);
  const double domega = S.bin_step_rad();
  std::vector<double> g(S.cols, 0.0);
  parallel_for(S.cols, [&](std::int64_t k) {
    double e = 0.0;
    for (int r = rows.first; r <= rows.last; ++r)
      e += std::norm(S.at(r, static_cast<int>(k))) * domega;
    g[k] = std::sqrt(e);
  });
  return g;
}

DetectionResult detect_impulses(const TfrGrid& S, const DetectionConfig& config,
                                const WindowSpec& spec) {
  config.validate(S.fs);
  DetectionResult out;
  out.g = saliency(S, config.band_low_hz, config.band_high_hz);
  const int cols = S.cols;
  const double mean_g =
      std::accumulate(out.g.begin(), out.g.end(), 0.0) / static_cast<double>(cols);
  out.threshold = config.threshold_factor * mean_g;

  const BandRows rows = band_rows(S, config.band_low_hz, config.band_high_hz);
  out.mask = TfrMask::zeros(S.fft_length, S.cols);
  out.mask.provenance = "saliency threshold " + std::to_string(config.threshold_factor) +
                        " x mean over band";
  for (int k = 0; k < cols; ++k) {
    if (!(out.g[k] > out.threshold)) continue;
    if (config.band_limited_mask) {
      for (int r = rows.first; r <= rows.last; ++r) out.mask.on[out.mask.index(r, k)] = 1;
    } else {
      for (int r = 0; r < S.fft_length; ++r) out.mask.on[out.mask.index(r, k)] = 1;
    }
  }

  // Local maxima above threshold, then greedy suppression within the
  // minimum separation, strongest first.
  std::vector<int> candidates;
  for (int k = 0; k < cols; ++k) {
    if (!(out.g[k] > out.threshold)) continue;
    const double left = k > 0 ? out.g[k - 1] : -1.0;
    const double right = k + 1 < cols ? out.g[k + 1] : -1.0;
    if (out.g[k] >= left && out.g[k] > right) candidates.push_back(k);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    if (out.g[a] != out.g[b]) return out.g[a] > out.g[b];
    return a < b;
  });
  const std::int64_t min_sep = std::llround(config.min_separation_s * S.fs);
  std::vector<int> peaks;
  for (int k : candidates) {
    bool clear = true;
    for (int p : peaks) {
      if (std::llabs(static_cast<std::int64_t>(p) - k) < min_sep) {
        clear = false;
        break;
      }
    }
    if (clear) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end());

  for (int peak : peaks) {
    int a = peak, b = peak;
    while (a > 0 && out.g[a - 1] > out.threshold) --a;
    while (b + 1 < cols && out.g[b + 1] > out.threshold) ++b;

    TfrMask run_mask = TfrMask::zeros(S.fft_length, S.cols);
    run_mask.provenance = "event run";
    for (int k = a; k <= b; ++k) {
      if (config.band_limited_mask) {
        for (int r = rows.first; r <= rows.last; ++r) run_mask.on[run_mask.index(r, k)] = 1;
      } else {
        for (int r = 0; r < S.fft_length; ++r) run_mask.on[run_mask.index(r, k)] = 1;
      }
    }
    SignalRecord rec = masked_reconstruct(S, run_mask, spec);
    const int lo = std::max(0, a - spec.support_radius);
    const int hi = std::min(cols - 1, b + spec.support_radius);

    ImpulseEvent ev;
    ev.time = S.time_of_col(peak);
    ev.saliency = out.g[peak];
    ev.waveform = crop(rec, lo, hi - lo + 1);
    out.events.push_back(std::move(ev));
  }
  return out;
}

}  // namespace tfss
