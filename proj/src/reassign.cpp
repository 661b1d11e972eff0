#include "tfss/reassign.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "tfss/parallel.hpp"

namespace tfss {

namespace {

double grid_max_abs(const TfrGrid& g) {
  const std::int64_t n = g.cells();
  std::mutex mu;
  double result = 0.0;
  // max is exact under any grouping, so the merge order cannot change it.
  parallel_chunks(n, [&](std::int64_t begin, std::int64_t end) {
    double m = 0.0;
    for (std::int64_t i = begin; i < end; ++i)
      m = std::max(m, std::abs(g.values[i]));
    std::lock_guard<std::mutex> lock(mu);
    result = std::max(result, m);
  });
  return result;
}

}  // namespace

ReassignFields compute_operator_fields(StftFamily& family, double gamma_rel) {
  if (gamma_rel < 0.0) throw std::invalid_argument("magnitude gate must be nonnegative");
  const TfrGrid& F = family.grid({0, 0});
  const TfrGrid& Fth = family.grid({1, 0});
  const TfrGrid& Fdh = family.grid({0, 1});

  ReassignFields fields;
  fields.fft_length = F.fft_length;
  fields.cols = F.cols;
  fields.fs = F.fs;
  fields.t0 = F.t0;
  const std::int64_t n = F.cells();
  fields.t_tilde.assign(n, cplx{0.0, 0.0});
  fields.omega_tilde.assign(n, cplx{0.0, 0.0});
  fields.t_hat.assign(n, 0.0);
  fields.omega_hat.assign(n, 0.0);
  fields.valid.assign(n, 0);

  const double gate = gamma_rel * grid_max_abs(F);
  const int cols = F.cols;

  parallel_for(F.rows(), [&](std::int64_t r) {
    const double omega = F.omega_of_row(static_cast<int>(r));
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + k;
      const cplx f = F.values[i];
      if (std::abs(f) <= gate) continue;
      const cplx t_tilde = fields.time_of_col(k) - Fth.values[i] / f;
      const cplx omega_tilde = cplx{0.0, omega} + Fdh.values[i] / f;
      fields.t_tilde[i] = t_tilde;
      fields.omega_tilde[i] = omega_tilde;
      fields.t_hat[i] = t_tilde.real();
      fields.omega_hat[i] = omega_tilde.imag();
      fields.valid[i] = 1;
    }
  });
  return fields;
}

OperatorSet compute_operators(const SignalRecord& x, const WindowSpec& spec,
                              int fft_length, double gamma_rel) {
  StftFamily family(x, spec, fft_length);
  ReassignFields fields = compute_operator_fields(family, gamma_rel);
  OperatorSet set{family.grid({0, 0}), std::move(fields)};
  return set;
}

ReassignedSpectrogram reassigned_spectrogram(const TfrGrid& F, const ReassignFields& fields) {
  if (fields.fft_length != F.fft_length || fields.cols != F.cols)
    throw std::invalid_argument("operator fields not aligned with grid");

  ReassignedSpectrogram out;
  out.energy = TfrGrid::zeros(F.fft_length, F.cols, F.fs, F.t0,
                              GridKind::ReassignedEnergy, F.from_real);

  const int M = F.fft_length;
  const int cols = F.cols;
  const double bin_scale = M / (kTwoPi * F.fs);  // rad/s -> bin index
  // Serial accumulation: any cell may land anywhere, so this is the simple
  // way to keep the output independent of the worker count.
  for (int r = 0; r < M; ++r) {
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = fields.index(r, k);
      if (!fields.valid[i]) continue;
      const double e = std::norm(F.values[i]);
      out.input_energy += e;
      const std::int64_t kt = round_half_down(fields.t_hat[i] * F.fs);
      const std::int64_t mt = round_half_down(fields.omega_hat[i] * bin_scale);
      if (kt < 0 || kt >= cols || mt < F.min_bin() || mt > F.max_bin()) {
        ++out.dropped_cells;
        continue;
      }
      out.energy.at(F.row_of_bin(static_cast<int>(mt)), static_cast<int>(kt)) += e;
      out.retained_energy += e;
    }
  }
  return out;
}

}  // namespace tfss
