#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tfss/types.hpp"
#include "tfss/window.hpp"

namespace tfss {

/// Binary mask aligned with a TfrGrid; provenance records the rule that
/// produced it.
struct TfrMask {
  int fft_length = 0;
  int cols = 0;
  std::vector<std::uint8_t> on;  // row-major
  std::string provenance;

  static TfrMask ones(int fft_length, int cols);
  static TfrMask zeros(int fft_length, int cols);
  std::size_t index(int r, int k) const { return static_cast<std::size_t>(r) * cols + k; }
};

/// Exact inversion of a (time-reassigned) synchrosqueezed grid; same
/// rectangle weights and real-part convention as stft_inverse. The row
/// marginals drive the result, so any squeeze that preserved them inverts
/// exactly.
SignalRecord tsst_inverse(const TfrGrid& S, const WindowSpec& spec);

/// tsst_inverse applied to the cellwise product S * mask.
SignalRecord masked_reconstruct(const TfrGrid& S, const TfrMask& mask,
                                const WindowSpec& spec);

}  // namespace tfss
