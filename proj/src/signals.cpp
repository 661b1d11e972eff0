#include "tfss/signals.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace tfss {

ComponentSpec ComponentSpec::impulse(double time_s, double amplitude) {
  ComponentSpec c;
  c.kind = Kind::Impulse;
  c.time = time_s;
  c.amplitude = amplitude;
  return c;
}

ComponentSpec ComponentSpec::tone(double f_hz, double amplitude, double phase) {
  ComponentSpec c;
  c.kind = Kind::Tone;
  c.f0 = f_hz;
  c.amplitude = amplitude;
  c.phase = phase;
  return c;
}

ComponentSpec ComponentSpec::linear_chirp(double f0_hz, double f1_hz, double amplitude,
                                          double phase) {
  ComponentSpec c;
  c.kind = Kind::LinearChirp;
  c.f0 = f0_hz;
  c.f1 = f1_hz;
  c.amplitude = amplitude;
  c.phase = phase;
  return c;
}

ComponentSpec ComponentSpec::sin_fm(double carrier_hz, double deviation_hz, double rate_hz,
                                    double amplitude, double phase) {
  ComponentSpec c;
  c.kind = Kind::SinFm;
  c.f_carrier = carrier_hz;
  c.f_dev = deviation_hz;
  c.f_mod = rate_hz;
  c.amplitude = amplitude;
  c.phase = phase;
  return c;
}

ComponentSpec ComponentSpec::gaussian_chirp(const ChirpModel& model, double amplitude) {
  ComponentSpec c;
  c.kind = Kind::GaussianChirp;
  c.model = model;
  c.amplitude = amplitude;
  return c;
}

namespace {

void require_in_band(double f_hz, double fs) {
  if (!(f_hz > 0.0 && f_hz < fs / 2.0))
    throw std::invalid_argument("component frequency outside (0, fs/2)");
}

SignalRecord render(const ComponentSpec& c, int length, double fs) {
  SignalRecord r;
  r.fs = fs;
  r.samples.assign(length, cplx{0.0, 0.0});
  const double duration = length / fs;
  switch (c.kind) {
    case ComponentSpec::Kind::Impulse: {
      if (c.time < 0.0 || c.time > (length - 1) / fs)
        throw std::invalid_argument("impulse time outside record");
      const int n = static_cast<int>(std::llround(c.time * fs));
      r.samples[n] = cplx{c.amplitude, 0.0};
      break;
    }
    case ComponentSpec::Kind::Tone: {
      require_in_band(c.f0, fs);
      for (int n = 0; n < length; ++n) {
        const double t = n / fs;
        r.samples[n] = cplx{c.amplitude * std::cos(kTwoPi * c.f0 * t + c.phase), 0.0};
      }
      break;
    }
    case ComponentSpec::Kind::LinearChirp: {
      require_in_band(c.f0, fs);
      require_in_band(c.f1, fs);
      const double rate = (c.f1 - c.f0) / duration;  // Hz per second
      for (int n = 0; n < length; ++n) {
        const double t = n / fs;
        const double phi = c.phase + kTwoPi * (c.f0 * t + 0.5 * rate * t * t);
        r.samples[n] = cplx{c.amplitude * std::cos(phi), 0.0};
      }
      break;
    }
    case ComponentSpec::Kind::SinFm: {
      require_in_band(c.f_carrier - c.f_dev, fs);
      require_in_band(c.f_carrier + c.f_dev, fs);
      if (c.f_mod <= 0.0) throw std::invalid_argument("modulation rate must be positive");
      for (int n = 0; n < length; ++n) {
        const double t = n / fs;
        // instantaneous frequency f_carrier + f_dev sin(2 pi f_mod t)
        const double phi = c.phase + kTwoPi * c.f_carrier * t -
                           (c.f_dev / c.f_mod) * std::cos(kTwoPi * c.f_mod * t);
        r.samples[n] = cplx{c.amplitude * std::cos(phi), 0.0};
      }
      break;
    }
    case ComponentSpec::Kind::GaussianChirp: {
      for (int n = 0; n < length; ++n) {
        const double t = n / fs;
        r.samples[n] = cplx{c.amplitude * c.model.value(t).real(), 0.0};
      }
      break;
    }
  }
  return r;
}

}  // namespace

Synthesis synthesize(const std::vector<ComponentSpec>& components, int length, double fs) {
  if (length < 1) throw std::invalid_argument("record length must be positive");
  if (fs <= 0.0) throw std::invalid_argument("sampling frequency must be positive");
  Synthesis out;
  out.mixture.fs = fs;
  out.mixture.samples.assign(length, cplx{0.0, 0.0});
  for (const ComponentSpec& c : components) {
    SignalRecord r = render(c, length, fs);
    for (int n = 0; n < length; ++n) out.mixture.samples[n] += r.samples[n];
    out.components.push_back(std::move(r));
  }
  return out;
}

namespace {

// Box-Muller over the raw mt19937_64 stream; std::normal_distribution is
// not pinned across standard libraries, this is.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(kTwoPi * u2);
    have_ = true;
    return radius * std::cos(kTwoPi * u2);
  }

 private:
  double uniform_open() {
    // (0, 1]: 53-bit mantissa, never zero so log stays finite.
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_ = false;
};

}  // namespace

SignalRecord add_noise(const SignalRecord& x, double snr_db, std::uint64_t seed) {
  x.validate();
  const double ex = x.energy();
  if (ex <= 0.0) throw std::invalid_argument("snr undefined for a zero signal");

  GaussianStream gauss(seed);
  std::vector<cplx> w(x.samples.size());
  double ew = 0.0;
  for (cplx& v : w) {
    if (x.real_input) {
      v = cplx{gauss.next(), 0.0};
    } else {
      v = cplx{gauss.next(), gauss.next()} * (1.0 / std::sqrt(2.0));
    }
    ew += std::norm(v);
  }
  if (ew <= 0.0) throw std::runtime_error("degenerate noise draw");

  const double sigma = std::sqrt(ex / (ew * std::pow(10.0, snr_db / 10.0)));
  SignalRecord y = x;
  for (std::size_t n = 0; n < w.size(); ++n) y.samples[n] += sigma * w[n];
  return y;
}

double rqf_db(const SignalRecord& x, const SignalRecord& xhat) {
  if (x.size() != xhat.size()) throw std::invalid_argument("rqf length mismatch");
  double num = 0.0, den = 0.0;
  for (int n = 0; n < x.size(); ++n) {
    num += std::norm(x.samples[n]);
    den += std::norm(x.samples[n] - xhat.samples[n]);
  }
  if (den <= 0.0) return kRqfCapDb;
  return std::min(10.0 * std::log10(num / den), kRqfCapDb);
}

SignalRecord chirp_model_record(const ChirpModel& model, int length, double fs,
                                bool analytic) {
  SignalRecord r;
  r.fs = fs;
  r.real_input = !analytic;
  r.samples.resize(length);
  for (int n = 0; n < length; ++n) {
    const cplx v = model.value(n / fs);
    r.samples[n] = analytic ? v : cplx{v.real(), 0.0};
  }
  return r;
}

Synthesis paper_corpus() {
  // Fixed constants; tests and the command line tool rely on this exact
  // layout (impulses near 1/4 and 3/4 of the record, chirp through the mid
  // band, modulated sinusoid above it).
  return synthesize(
      {
          ComponentSpec::impulse(125.0, 3.0),
          ComponentSpec::impulse(375.0, 3.0),
          ComponentSpec::tone(0.08, 1.0),
          ComponentSpec::linear_chirp(0.12, 0.38, 1.0),
          ComponentSpec::sin_fm(0.43, 0.03, 0.008, 1.0),
      },
      500, 1.0);
}

Synthesis two_impulse_tone_corpus() {
  return synthesize(
      {
          ComponentSpec::impulse(125.0, 3.0),
          ComponentSpec::impulse(375.0, 3.0),
          ComponentSpec::tone(0.08, 1.0),
      },
      500, 1.0);
}

Synthesis single_impulse_corpus(int length, double fs, double time_s, double amplitude) {
  return synthesize({ComponentSpec::impulse(time_s, amplitude)}, length, fs);
}

}  // namespace tfss
