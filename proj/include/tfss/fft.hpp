#pragma once

#include <complex>

namespace tfss {

/// Unnormalized complex-to-complex DFT of a fixed length:
///   out[j] = sum_i in[i] * exp(sign * 2*pi*i*j/n),  sign = -1 (Forward) / +1 (Backward).
///
/// Plans are process-global and reused; creation is serialized, execution is
/// thread-safe on distinct buffers, and results do not depend on the planner
/// state (deterministic planning mode).
class Fft {
 public:
  enum class Direction { Forward, Backward };

  int length() const { return length_; }
  void transform(const std::complex<double>* in, std::complex<double>* out) const;

  /// Returns the shared plan for (length, dir); valid for the process lifetime.
  static const Fft& plan(int length, Direction dir);

 private:
  Fft(int length, Direction dir);
  int length_ = 0;
  void* plan_ = nullptr;
};

}  // namespace tfss
