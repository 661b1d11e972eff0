#include "tfss/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace tfss {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int length, Direction dir) : length_(length) {
  if (length < 1) throw std::invalid_argument("fft length must be positive");
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_ESTIMATE keeps planning deterministic; FFTW_UNALIGNED lets the plan
  // run on ordinary std::vector storage from any thread.
  std::vector<std::complex<double>> scratch(length);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  plan_ = fftw_plan_dft_1d(length, buf, buf,
                           dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_) throw std::runtime_error("fftw planning failed");
}

void Fft::transform(const std::complex<double>* in, std::complex<double>* out) const {
  fftw_execute_dft(static_cast<fftw_plan>(plan_),
                   reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

const Fft& Fft::plan(int length, Direction dir) {
  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Fft>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(length, static_cast<int>(dir));
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::unique_ptr<Fft>(new Fft(length, dir))).first;
  }
  return *it->second;
}

}  // namespace tfss
