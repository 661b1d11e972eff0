#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace tfss {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Nearest integer with exact halves rounding toward -inf, i.e. toward the
/// earlier time sample / lower frequency bin.
inline std::int64_t round_half_down(double v) {
  return static_cast<std::int64_t>(std::ceil(v - 0.5));
}

/// Uniformly sampled time series. samples[n] sits at start_time + n/fs.
/// real_input marks records whose reconstructions should be projected back
/// onto the real axis.
struct SignalRecord {
  std::vector<cplx> samples;
  double fs = 1.0;
  double start_time = 0.0;
  bool real_input = true;

  int size() const { return static_cast<int>(samples.size()); }
  double time_of(int n) const { return start_time + n / fs; }
  double energy() const;

  /// Throws std::invalid_argument on fs <= 0, empty or non-finite samples.
  void validate() const;
};

SignalRecord real_record(const std::vector<double>& x, double fs, double start_time = 0.0);

/// Zero-extends by `radius` samples on each side; start_time shifts so that
/// every original sample keeps its absolute time.
SignalRecord zero_pad(const SignalRecord& x, int radius);

/// Samples [begin, begin+count) as a new record with adjusted start_time.
SignalRecord crop(const SignalRecord& x, int begin, int count);

enum class GridKind : std::uint8_t {
  Stft = 0,
  Spectrogram = 1,
  ReassignedEnergy = 2,
  Sst1 = 3,
  Sst2 = 4,
  Tsst1 = 5,
  Tsst2 = 6,
};

const char* grid_kind_name(GridKind kind);

/// Complex M x N time-frequency matrix plus axis metadata. Rows hold the
/// frequency bins m = -M/2+1 .. M/2 in ascending order; column k sits at
/// time t0 + k/fs. Values are stored row-major so squeezing along time
/// works on contiguous memory.
struct TfrGrid {
  int fft_length = 0;  // M, even
  int cols = 0;        // N
  double fs = 1.0;
  double t0 = 0.0;
  GridKind kind = GridKind::Stft;
  bool from_real = true;
  std::vector<cplx> values;

  static TfrGrid zeros(int fft_length, int cols, double fs, double t0,
                       GridKind kind, bool from_real);

  int rows() const { return fft_length; }
  std::int64_t cells() const { return static_cast<std::int64_t>(fft_length) * cols; }
  int bin_of_row(int r) const { return r - fft_length / 2 + 1; }
  int row_of_bin(int m) const { return m + fft_length / 2 - 1; }
  int min_bin() const { return -fft_length / 2 + 1; }
  int max_bin() const { return fft_length / 2; }
  double omega_of_row(int r) const { return kTwoPi * bin_of_row(r) * fs / fft_length; }
  double bin_step_rad() const { return kTwoPi * fs / fft_length; }
  double time_of_col(int k) const { return t0 + k / fs; }

  cplx& at(int r, int k) { return values[static_cast<std::size_t>(r) * cols + k]; }
  const cplx& at(int r, int k) const { return values[static_cast<std::size_t>(r) * cols + k]; }

  double energy() const;  // sum of |value|^2 over all cells
  void validate() const;  // shape and finiteness checks
};

}  // namespace tfss
