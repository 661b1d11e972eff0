#include "tfss/stft.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "tfss/fft.hpp"
#include "tfss/parallel.hpp"

namespace tfss {

TfrGrid stft_forward(const SignalRecord& x, const WindowSpec& spec,
                     DerivedWindowKind kind, int fft_length) {
  x.validate();
  spec.validate();
  if (fft_length <= 0 || fft_length % 2 != 0)
    throw std::invalid_argument("fft length must be even and positive");
  if (std::abs(spec.fs - x.fs) > 1e-12 * x.fs)
    throw std::invalid_argument("window and record sampling frequencies differ");
  if (fft_length < 2 * spec.support_radius)
    std::fprintf(stderr, "tfss: warning: fft length %d below twice the window radius %d\n",
                 fft_length, spec.support_radius);

  const int N = x.size();
  const int M = fft_length;
  const int R = spec.support_radius;
  const std::vector<double> w = gaussian_window(spec, kind);

  TfrGrid grid = TfrGrid::zeros(M, N, x.fs, x.start_time, GridKind::Stft, x.real_input);
  const Fft& fft = Fft::plan(M, Fft::Direction::Forward);
  const double inv_fs = 1.0 / x.fs;
  const int half = M / 2;

  parallel_chunks(N, [&](std::int64_t begin, std::int64_t end) {
    std::vector<cplx> buf(M);
    std::vector<cplx> out(M);
    for (std::int64_t k = begin; k < end; ++k) {
      std::fill(buf.begin(), buf.end(), cplx{0.0, 0.0});
      const int lo = std::max<int>(0, static_cast<int>(k) - R);
      const int hi = std::min<int>(N - 1, static_cast<int>(k) + R);
      // Placing x[n] h[k-n] at slot n mod M realizes e^{-j 2 pi m n / M}
      // exactly for every n, including frames wider than the FFT.
      for (int n = lo; n <= hi; ++n)
        buf[n % M] += x.samples[n] * w[(static_cast<int>(k) - n) + R];
      fft.transform(buf.data(), out.data());
      for (int r = 0; r < M; ++r) {
        const int m = r - half + 1;
        const int mm = m >= 0 ? m : m + M;
        grid.at(r, static_cast<int>(k)) = out[mm] * inv_fs;
      }
    }
  });
  return grid;
}

TfrGrid stft_forward(const SignalRecord& x, const WindowSpec& spec, int fft_length) {
  return stft_forward(x, spec, DerivedWindowKind{}, fft_length);
}

std::vector<cplx> stft_time_marginal(const TfrGrid& F) {
  const double inv_fs = 1.0 / F.fs;
  std::vector<cplx> marginal(F.rows());
  parallel_for(F.rows(), [&](std::int64_t r) {
    cplx sum{0.0, 0.0};
    for (int k = 0; k < F.cols; ++k) sum += F.at(static_cast<int>(r), k);
    marginal[r] = sum * inv_fs;
  });
  return marginal;
}

SignalRecord stft_inverse(const TfrGrid& F, const WindowSpec& spec) {
  if (F.fft_length <= 0 || F.cols <= 0) throw std::invalid_argument("empty grid");
  const cplx gain = window_zero_frequency_gain(spec);
  if (std::abs(gain) < 1e-12) throw std::invalid_argument("degenerate window gain");

  const int M = F.fft_length;
  const int half = M / 2;

  // Row sums of the grid, laid out in FFT index order. With the rectangle
  // weights the double sum collapses to one inverse DFT of the time marginal:
  //   x[n] = (1/(M F_h(0)^*)) sum_m (sum_k F[m,k]) e^{j 2 pi m n / M}.
  std::vector<cplx> rowsum(M);
  parallel_for(M, [&](std::int64_t r) {
    cplx sum{0.0, 0.0};
    for (int k = 0; k < F.cols; ++k) sum += F.at(static_cast<int>(r), k);
    const int m = static_cast<int>(r) - half + 1;
    const int mm = m >= 0 ? m : m + M;
    rowsum[mm] = sum;
  });

  std::vector<cplx> synth(M);
  Fft::plan(M, Fft::Direction::Backward).transform(rowsum.data(), synth.data());

  const cplx scale = 1.0 / (static_cast<double>(M) * std::conj(gain));
  SignalRecord out;
  out.fs = F.fs;
  out.start_time = F.t0;
  out.real_input = F.from_real;
  out.samples.resize(F.cols);
  for (int n = 0; n < F.cols; ++n) {
    cplx v = synth[n % M] * scale;
    out.samples[n] = F.from_real ? cplx{v.real(), 0.0} : v;
  }
  return out;
}

StftFamily::StftFamily(SignalRecord x, WindowSpec spec, int fft_length)
    : x_(std::move(x)), spec_(spec), fft_length_(fft_length) {
  x_.validate();
  spec_.validate();
}

const TfrGrid& StftFamily::grid(DerivedWindowKind kind) {
  auto key = std::make_pair(kind.time_weight, kind.derivative);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, stft_forward(x_, spec_, kind, fft_length_)).first;
  return it->second;
}

void StftFamily::release(DerivedWindowKind kind) {
  cache_.erase(std::make_pair(kind.time_weight, kind.derivative));
}

}  // namespace tfss
