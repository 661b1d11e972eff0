#pragma once

#include <vector>

#include "tfss/types.hpp"

namespace tfss {

/// Gaussian analysis window h(t) = exp(-t^2/(2 T^2)) / (sqrt(2 pi) T),
/// truncated to |i| <= support_radius samples. The default radius ceil(5 L)
/// keeps the discarded tail below 4e-6 of the peak, small enough for the
/// marginal and inversion identities to hold at test tolerances.
struct WindowSpec {
  double T = 1.0;          // time spread, seconds
  double fs = 1.0;         // sampling frequency, Hz
  int support_radius = 0;  // half-width of the truncated support, samples

  double L() const { return T * fs; }
  int length() const { return 2 * support_radius + 1; }

  static int min_radius(double T, double fs);
  static WindowSpec make(double T, double fs);
  static WindowSpec make(double T, double fs, int support_radius);

  void validate() const;
};

/// Selects t^n * d^k h/dt^k from the derived window family. Orders with
/// time_weight + derivative > 3 are not needed by the second-order
/// estimators and are rejected.
struct DerivedWindowKind {
  int time_weight = 0;
  int derivative = 0;

  bool operator==(const DerivedWindowKind&) const = default;
};

/// Samples t^n h^(k)(t) at t = i/fs for i in [-R, R], evaluating the
/// Gaussian derivatives in closed form (Hermite polynomial factors).
std::vector<double> gaussian_window(const WindowSpec& spec, DerivedWindowKind kind = {});

/// F_h(0) = sum_i h[i] / fs over the truncated support (rectangle rule);
/// about 1 for the unit-normalized Gaussian.
cplx window_zero_frequency_gain(const WindowSpec& spec);

}  // namespace tfss
