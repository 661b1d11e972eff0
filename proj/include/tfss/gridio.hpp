#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tfss/types.hpp"

namespace tfss {

/// Binary grid file: little-endian header {magic "TFSS", version u32,
/// M u32, N u32, fs f64, kind u8} followed by M*N complex64 (f32 pairs)
/// values, row-major by frequency bin in ascending m order.
void write_grid(const std::string& path, const TfrGrid& grid);
TfrGrid read_grid(const std::string& path);

/// 8-bit grayscale PGM of the log magnitude, floored at floor_db below the
/// maximum. Rows run from the highest frequency bin down; a band limits the
/// rendered rows to [band_low_hz, band_high_hz] when band_high_hz > 0.
void write_pgm(const std::string& path, const TfrGrid& grid, double floor_db = -60.0,
               double band_low_hz = 0.0, double band_high_hz = 0.0);

/// Per-cell magnitude as CSV rows "bin,freq_hz,time_s,magnitude".
void write_magnitude_csv(const std::string& path, const TfrGrid& grid);

/// Signal CSV: one value column, or time,value columns. With a time column
/// the sampling rate comes from the time axis; otherwise fs_hint must be
/// positive.
SignalRecord read_signal_csv(const std::string& path, double fs_hint);
void write_signal_csv(const std::string& path, const SignalRecord& x);

/// Raw little-endian float64 samples at a caller-provided rate.
SignalRecord read_signal_f64(const std::string& path, double fs);

void write_metadata(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace tfss
