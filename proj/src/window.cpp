#include "tfss/window.hpp"

#include <cmath>
#include <stdexcept>

namespace tfss {

int WindowSpec::min_radius(double T, double fs) {
  return static_cast<int>(std::ceil(5.0 * T * fs));
}

WindowSpec WindowSpec::make(double T, double fs) {
  return make(T, fs, min_radius(T, fs));
}

WindowSpec WindowSpec::make(double T, double fs, int support_radius) {
  WindowSpec spec{T, fs, support_radius};
  spec.validate();
  return spec;
}

void WindowSpec::validate() const {
  if (T <= 0.0) throw std::invalid_argument("window time spread must be positive");
  if (fs <= 0.0) throw std::invalid_argument("sampling frequency must be positive");
  if (support_radius < min_radius(T, fs))
    throw std::invalid_argument("window support radius below 5 L truncation bound");
}

namespace {

// d^k h / dt^k = poly_k(t) * h(t) for the Gaussian; monomial evaluation keeps
// the odd/even symmetry of the samples exact in floating point.
double derivative_factor(int order, double t, double T) {
  const double T2 = T * T;
  switch (order) {
    case 0: return 1.0;
    case 1: return -t / T2;
    case 2: return (t * t) / (T2 * T2) - 1.0 / T2;
    case 3: return -(t * t * t) / (T2 * T2 * T2) + 3.0 * t / (T2 * T2);
  }
  throw std::invalid_argument("unsupported window order");
}

double time_weight_factor(int n, double t) {
  double w = 1.0;
  for (int i = 0; i < n; ++i) w *= t;
  return w;
}

}  // namespace

std::vector<double> gaussian_window(const WindowSpec& spec, DerivedWindowKind kind) {
  spec.validate();
  if (kind.time_weight < 0 || kind.derivative < 0 ||
      kind.time_weight + kind.derivative > 3)
    throw std::invalid_argument("unsupported window order");

  const int R = spec.support_radius;
  const double norm = 1.0 / (std::sqrt(kTwoPi) * spec.T);
  std::vector<double> w(spec.length());
  for (int i = -R; i <= R; ++i) {
    const double t = i / spec.fs;
    const double h = norm * std::exp(-t * t / (2.0 * spec.T * spec.T));
    w[i + R] = time_weight_factor(kind.time_weight, t) *
               derivative_factor(kind.derivative, t, spec.T) * h;
  }
  return w;
}

cplx window_zero_frequency_gain(const WindowSpec& spec) {
  const std::vector<double> h = gaussian_window(spec, {});
  double sum = 0.0;
  for (double v : h) sum += v;
  return cplx{sum / spec.fs, 0.0};
}

}  // namespace tfss
