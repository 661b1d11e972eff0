#include "tfss/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfss {

double SignalRecord::energy() const {
  double e = 0.0;
  for (const cplx& v : samples) e += std::norm(v);
  return e;
}

void SignalRecord::validate() const {
  if (fs <= 0.0) throw std::invalid_argument("sampling frequency must be positive");
  if (samples.empty()) throw std::invalid_argument("empty signal record");
  for (const cplx& v : samples) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("signal record contains non-finite samples");
  }
}

SignalRecord real_record(const std::vector<double>& x, double fs, double start_time) {
  SignalRecord r;
  r.samples.reserve(x.size());
  for (double v : x) r.samples.emplace_back(v, 0.0);
  r.fs = fs;
  r.start_time = start_time;
  r.real_input = true;
  return r;
}

SignalRecord zero_pad(const SignalRecord& x, int radius) {
  if (radius < 0) throw std::invalid_argument("pad radius must be nonnegative");
  SignalRecord y;
  y.fs = x.fs;
  y.start_time = x.start_time - radius / x.fs;
  y.real_input = x.real_input;
  y.samples.assign(x.samples.size() + 2 * static_cast<std::size_t>(radius), cplx{0.0, 0.0});
  std::copy(x.samples.begin(), x.samples.end(), y.samples.begin() + radius);
  return y;
}

SignalRecord crop(const SignalRecord& x, int begin, int count) {
  if (begin < 0 || count < 0 || begin + count > x.size())
    throw std::invalid_argument("crop range outside record");
  SignalRecord y;
  y.fs = x.fs;
  y.start_time = x.start_time + begin / x.fs;
  y.real_input = x.real_input;
  y.samples.assign(x.samples.begin() + begin, x.samples.begin() + begin + count);
  return y;
}

const char* grid_kind_name(GridKind kind) {
  switch (kind) {
    case GridKind::Stft: return "stft";
    case GridKind::Spectrogram: return "spectrogram";
    case GridKind::ReassignedEnergy: return "reassigned";
    case GridKind::Sst1: return "sst1";
    case GridKind::Sst2: return "sst2";
    case GridKind::Tsst1: return "tsst1";
    case GridKind::Tsst2: return "tsst2";
  }
  return "unknown";
}

TfrGrid TfrGrid::zeros(int fft_length, int cols, double fs, double t0,
                       GridKind kind, bool from_real) {
  TfrGrid g;
  g.fft_length = fft_length;
  g.cols = cols;
  g.fs = fs;
  g.t0 = t0;
  g.kind = kind;
  g.from_real = from_real;
  g.values.assign(static_cast<std::size_t>(fft_length) * cols, cplx{0.0, 0.0});
  return g;
}

double TfrGrid::energy() const {
  double e = 0.0;
  for (const cplx& v : values) e += std::norm(v);
  return e;
}

void TfrGrid::validate() const {
  if (fft_length <= 0 || fft_length % 2 != 0)
    throw std::invalid_argument("grid fft length must be even and positive");
  if (cols <= 0) throw std::invalid_argument("grid must have at least one column");
  if (values.size() != static_cast<std::size_t>(fft_length) * cols)
    throw std::invalid_argument("grid storage does not match its shape");
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("grid contains non-finite values");
  }
}

}  // namespace tfss
