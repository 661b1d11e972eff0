#include "tfss/synchro.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfss/parallel.hpp"

namespace tfss {

cplx ChirpModel::value(double t) const {
  const double lambda = log_amp + mu * t + nu * t * t / 2.0;
  const double phi = phase + omega0 * t + alpha * t * t / 2.0;
  return std::exp(lambda) * cplx{std::cos(phi), std::sin(phi)};
}

double default_alpha_gate(double fs, int fft_length) {
  const double bin_per_sample = kTwoPi * fs * fs / (static_cast<double>(fft_length) * fft_length);
  return bin_per_sample / 100.0;
}

namespace {

// Relative cancellation threshold for the estimator denominators: a cell
// whose denominator is this far below its terms carries no usable curvature
// information (a pure impulse cancels the (w2) denominator identically).
constexpr double kDenominatorGateRel = 1e-8;

void median_smooth_field(ModulationField& f) {
  const int rows = f.fft_length;
  const int cols = f.cols;
  std::vector<cplx> out(f.q.size());
  auto component_median = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  parallel_for(rows, [&](std::int64_t r) {
    std::vector<double> re, im;
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + k;
      if (!f.valid[i]) continue;
      re.clear();
      im.clear();
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dk = -1; dk <= 1; ++dk) {
          const int rr = static_cast<int>(r) + dr;
          const int kk = k + dk;
          if (rr < 0 || rr >= rows || kk < 0 || kk >= cols) continue;
          const std::size_t j = static_cast<std::size_t>(rr) * cols + kk;
          if (!f.valid[j]) continue;
          re.push_back(f.q[j].real());
          im.push_back(f.q[j].imag());
        }
      }
      out[i] = cplx{component_median(re), component_median(im)};
    }
  });
  for (std::size_t i = 0; i < f.q.size(); ++i)
    if (f.valid[i]) f.q[i] = out[i];
}

}  // namespace

ModulationField estimate_modulation(StftFamily& family, const EstimatorChoice& choice,
                                    double gamma_rel) {
  if (choice.order != 2)
    throw std::invalid_argument("unsupported modulation estimator order");

  const TfrGrid& F = family.grid({0, 0});
  const TfrGrid& Fth = family.grid({1, 0});
  const TfrGrid& Fdh = family.grid({0, 1});
  const TfrGrid& Ftdh = family.grid({1, 1});
  const bool wn = choice.family == EstimatorFamily::FrequencyDerivatives;
  const TfrGrid& Faux = wn ? family.grid({2, 0}) : family.grid({0, 2});

  ModulationField out;
  out.fft_length = F.fft_length;
  out.cols = F.cols;
  const std::int64_t n = F.cells();
  out.q.assign(n, cplx{0.0, 0.0});
  out.valid.assign(n, 0);

  double gate = 0.0;
  {
    double m = 0.0;
    for (const cplx& v : F.values) m = std::max(m, std::abs(v));
    gate = gamma_rel * m;
  }

  parallel_for(n, [&](std::int64_t i) {
    const cplx f = F.values[i];
    if (std::abs(f) <= gate) return;
    cplx num, den;
    double den_scale;
    if (wn) {
      // (w2): ((F_TDh + F_h) F_h - F_Th F_Dh) / (F_Th^2 - F_T2h F_h)
      num = (Ftdh.values[i] + f) * f - Fth.values[i] * Fdh.values[i];
      const cplx d1 = Fth.values[i] * Fth.values[i];
      const cplx d2 = Faux.values[i] * f;
      den = d1 - d2;
      den_scale = std::abs(d1) + std::abs(d2);
    } else {
      // (t2): (F_D2h F_h - F_Dh^2) / (F_Th F_Dh - F_TDh F_h)
      num = Faux.values[i] * f - Fdh.values[i] * Fdh.values[i];
      const cplx d1 = Fth.values[i] * Fdh.values[i];
      const cplx d2 = Ftdh.values[i] * f;
      den = d1 - d2;
      den_scale = std::abs(d1) + std::abs(d2);
    }
    if (std::abs(den) <= kDenominatorGateRel * den_scale) return;
    out.q[i] = num / den;
    out.valid[i] = 1;
  });

  if (choice.median_smooth) median_smooth_field(out);
  return out;
}

ModulationField estimate_modulation(const SignalRecord& x, const WindowSpec& spec,
                                    int fft_length, const EstimatorChoice& choice,
                                    double gamma_rel) {
  StftFamily family(x, spec, fft_length);
  return estimate_modulation(family, choice, gamma_rel);
}

GroupDelayFields group_delay_second_order(const ReassignFields& fields,
                                          const ModulationField& qf,
                                          const EstimatorChoice& choice) {
  if (qf.fft_length != fields.fft_length || qf.cols != fields.cols)
    throw std::invalid_argument("modulation field not aligned with operator fields");
  const double gate = choice.alpha_gate >= 0.0
                          ? choice.alpha_gate
                          : default_alpha_gate(fields.fs, fields.fft_length);

  GroupDelayFields out;
  const std::int64_t n = fields.cells();
  out.t2.assign(n, 0.0);
  out.t2b.assign(n, 0.0);
  const int cols = fields.cols;

  parallel_for(fields.fft_length, [&](std::int64_t r) {
    const double omega = fields.omega_of_row(static_cast<int>(r));
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + k;
      if (!fields.valid[i]) continue;
      const double t_hat = fields.t_hat[i];
      const double alpha = qf.valid[i] ? qf.q[i].imag() : 0.0;
      if (std::abs(alpha) <= gate) {
        out.t2[i] = t_hat;
        out.t2b[i] = t_hat;
        continue;
      }
      const double detune = omega - fields.omega_hat[i];
      const cplx qt = qf.q[i] * fields.t_tilde[i];
      out.t2[i] = (detune + qt.imag()) / alpha;
      out.t2b[i] = t_hat + detune / alpha;
    }
  });
  return out;
}

std::vector<double> instantaneous_frequency_second_order(const ReassignFields& fields,
                                                         const ModulationField& qf,
                                                         const EstimatorChoice& choice) {
  if (qf.fft_length != fields.fft_length || qf.cols != fields.cols)
    throw std::invalid_argument("modulation field not aligned with operator fields");
  const double gate = choice.alpha_gate >= 0.0
                          ? choice.alpha_gate
                          : default_alpha_gate(fields.fs, fields.fft_length);

  const std::int64_t n = fields.cells();
  std::vector<double> omega2(n, 0.0);
  const int cols = fields.cols;

  parallel_for(fields.fft_length, [&](std::int64_t r) {
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + k;
      if (!fields.valid[i]) continue;
      const double omega_hat = fields.omega_hat[i];
      const double alpha = qf.valid[i] ? qf.q[i].imag() : 0.0;
      if (std::abs(alpha) <= gate) {
        omega2[i] = omega_hat;
        continue;
      }
      const cplx qt = qf.q[i] * fields.t_tilde[i];
      omega2[i] = omega_hat - qt.imag() + alpha * fields.time_of_col(k);
    }
  });
  return omega2;
}

SqueezedGrid tsst(const TfrGrid& F, const std::vector<double>& t_field,
                  const std::vector<std::uint8_t>& valid, GridKind kind) {
  if (t_field.size() != F.values.size() || valid.size() != F.values.size())
    throw std::invalid_argument("squeeze field not aligned with grid");

  SqueezedGrid out;
  out.grid = TfrGrid::zeros(F.fft_length, F.cols, F.fs, F.t0, kind, F.from_real);
  const int cols = F.cols;
  std::vector<std::int64_t> row_dropped(F.rows(), 0);
  std::vector<double> row_dropped_energy(F.rows(), 0.0);

  // Each row squeezes independently along time; rows are parallel, the
  // in-row accumulation order is fixed by k.
  parallel_for(F.rows(), [&](std::int64_t r) {
    const std::size_t base = static_cast<std::size_t>(r) * cols;
    for (int k = 0; k < cols; ++k) {
      const std::size_t i = base + k;
      const cplx v = F.values[i];
      if (!valid[i]) {
        out.grid.values[i] += v;  // pass through unmoved
        continue;
      }
      const std::int64_t kt = round_half_down(t_field[i] * F.fs);
      if (kt < 0 || kt >= cols) {
        ++row_dropped[r];
        row_dropped_energy[r] += std::norm(v);
        continue;
      }
      out.grid.values[base + kt] += v;
    }
  });
  for (int r = 0; r < F.rows(); ++r) {
    out.dropped_cells += row_dropped[r];
    out.dropped_energy += row_dropped_energy[r];
  }
  return out;
}

SqueezedGrid vertical_sst(const TfrGrid& F, const std::vector<double>& omega_field,
                          const std::vector<std::uint8_t>& valid, GridKind kind) {
  if (omega_field.size() != F.values.size() || valid.size() != F.values.size())
    throw std::invalid_argument("squeeze field not aligned with grid");

  SqueezedGrid out;
  out.grid = TfrGrid::zeros(F.fft_length, F.cols, F.fs, F.t0, kind, F.from_real);
  const int cols = F.cols;
  const double bin_scale = F.fft_length / (kTwoPi * F.fs);
  std::vector<std::int64_t> col_dropped(cols, 0);
  std::vector<double> col_dropped_energy(cols, 0.0);

  parallel_for(cols, [&](std::int64_t k) {
    for (int r = 0; r < F.rows(); ++r) {
      const std::size_t i = static_cast<std::size_t>(r) * cols + k;
      const cplx v = F.values[i];
      if (!valid[i]) {
        out.grid.values[i] += v;
        continue;
      }
      const std::int64_t mt = round_half_down(omega_field[i] * bin_scale);
      if (mt < F.min_bin() || mt > F.max_bin()) {
        ++col_dropped[k];
        col_dropped_energy[k] += std::norm(v);
        continue;
      }
      out.grid.at(F.row_of_bin(static_cast<int>(mt)), static_cast<int>(k)) += v;
    }
  });
  for (int k = 0; k < cols; ++k) {
    out.dropped_cells += col_dropped[k];
    out.dropped_energy += col_dropped_energy[k];
  }
  return out;
}

}  // namespace tfss
