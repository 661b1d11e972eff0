#pragma once

#include <map>
#include <vector>

#include "tfss/types.hpp"
#include "tfss/window.hpp"

namespace tfss {

/// Discrete STFT with the absolute-time phase convention
///   F[m,k] = (1/fs) * sum_n x[n] * h[(k-n)/fs]^* * e^{-j 2 pi m n / M},
/// one column per sample of the record, zero extension outside it. The
/// phase is anchored to the sample index n, not to the window center; the
/// sign structure of the reassignment operators depends on this.
TfrGrid stft_forward(const SignalRecord& x, const WindowSpec& spec,
                     DerivedWindowKind kind, int fft_length);
TfrGrid stft_forward(const SignalRecord& x, const WindowSpec& spec, int fft_length);

/// marginal[m] = sum_k F[m,k] / fs. Equals F_h(0)^* X(w_m) when the frames
/// cover the signal support plus the window radius; callers analyzing
/// full-support records must zero_pad first, truncation is not detected.
std::vector<cplx> stft_time_marginal(const TfrGrid& F);

/// x[n] = 1/(2 pi F_h(0)^*) sum_m sum_k F[m,k] e^{j w_m n / fs} dtau domega
/// with rectangle weights dtau = 1/fs, domega = 2 pi fs / M. Records marked
/// real are projected onto the real axis.
SignalRecord stft_inverse(const TfrGrid& F, const WindowSpec& spec);

/// Computes and caches the derived-window STFTs of one record on a shared
/// grid, so estimators needing several windows reuse the frame loop.
class StftFamily {
 public:
  StftFamily(SignalRecord x, WindowSpec spec, int fft_length);

  const TfrGrid& grid(DerivedWindowKind kind);
  void release(DerivedWindowKind kind);

  const SignalRecord& record() const { return x_; }
  const WindowSpec& spec() const { return spec_; }
  int fft_length() const { return fft_length_; }

 private:
  SignalRecord x_;
  WindowSpec spec_;
  int fft_length_;
  std::map<std::pair<int, int>, TfrGrid> cache_;
};

}  // namespace tfss
