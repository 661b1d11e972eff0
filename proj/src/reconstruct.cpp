#include "tfss/reconstruct.hpp"

#include <stdexcept>

#include "tfss/stft.hpp"

namespace tfss {

TfrMask TfrMask::ones(int fft_length, int cols) {
  TfrMask m;
  m.fft_length = fft_length;
  m.cols = cols;
  m.on.assign(static_cast<std::size_t>(fft_length) * cols, 1);
  return m;
}

TfrMask TfrMask::zeros(int fft_length, int cols) {
  TfrMask m;
  m.fft_length = fft_length;
  m.cols = cols;
  m.on.assign(static_cast<std::size_t>(fft_length) * cols, 0);
  return m;
}

SignalRecord tsst_inverse(const TfrGrid& S, const WindowSpec& spec) {
  return stft_inverse(S, spec);
}

SignalRecord masked_reconstruct(const TfrGrid& S, const TfrMask& mask,
                                const WindowSpec& spec) {
  if (mask.fft_length != S.fft_length || mask.cols != S.cols)
    throw std::invalid_argument("mask not aligned with grid");
  TfrGrid masked = S;
  for (std::size_t i = 0; i < masked.values.size(); ++i)
    if (!mask.on[i]) masked.values[i] = cplx{0.0, 0.0};
  return tsst_inverse(masked, spec);
}

}  // namespace tfss
