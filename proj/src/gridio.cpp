#include "tfss/gridio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tfss {

namespace {

constexpr char kMagic[4] = {'T', 'F', 'S', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_bytes(std::string& out, const void* p, std::size_t n) {
  out.append(static_cast<const char*>(p), n);
}

template <typename T>
void put_le(std::string& out, T v) {
  static_assert(std::endian::native == std::endian::little,
                "little-endian serialization assumes a little-endian host");
  put_bytes(out, &v, sizeof(v));
}

template <typename T>
T get_le(const std::string& buf, std::size_t& pos) {
  if (pos + sizeof(T) > buf.size()) throw std::runtime_error("grid file truncated");
  T v;
  std::memcpy(&v, buf.data() + pos, sizeof(T));
  pos += sizeof(T);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace

void write_grid(const std::string& path, const TfrGrid& grid) {
  std::string buf;
  buf.reserve(25 + grid.values.size() * 8);
  put_bytes(buf, kMagic, 4);
  put_le<std::uint32_t>(buf, kVersion);
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(grid.fft_length));
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(grid.cols));
  put_le<double>(buf, grid.fs);
  put_le<std::uint8_t>(buf, static_cast<std::uint8_t>(grid.kind));
  for (const cplx& v : grid.values) {
    put_le<float>(buf, static_cast<float>(v.real()));
    put_le<float>(buf, static_cast<float>(v.imag()));
  }
  write_file(path, buf);
}

TfrGrid read_grid(const std::string& path) {
  const std::string buf = read_file(path);
  std::size_t pos = 0;
  if (buf.size() < 4 || std::memcmp(buf.data(), kMagic, 4) != 0)
    throw std::runtime_error("not a grid file: " + path);
  pos = 4;
  const auto version = get_le<std::uint32_t>(buf, pos);
  if (version != kVersion) throw std::runtime_error("unsupported grid file version");
  const auto M = get_le<std::uint32_t>(buf, pos);
  const auto N = get_le<std::uint32_t>(buf, pos);
  const double fs = get_le<double>(buf, pos);
  const auto kind = get_le<std::uint8_t>(buf, pos);
  if (M == 0 || M % 2 != 0 || N == 0) throw std::runtime_error("bad grid file header");

  TfrGrid grid = TfrGrid::zeros(static_cast<int>(M), static_cast<int>(N), fs, 0.0,
                                static_cast<GridKind>(kind), true);
  for (cplx& v : grid.values) {
    const float re = get_le<float>(buf, pos);
    const float im = get_le<float>(buf, pos);
    v = cplx{re, im};
  }
  return grid;
}

void write_pgm(const std::string& path, const TfrGrid& grid, double floor_db,
               double band_low_hz, double band_high_hz) {
  int r_lo = 0, r_hi = grid.rows() - 1;
  if (band_high_hz > 0.0) {
    const double bins_per_hz = grid.fft_length / grid.fs;
    r_lo = std::max(grid.row_of_bin(static_cast<int>(std::ceil(band_low_hz * bins_per_hz - 1e-9))),
                    0);
    r_hi = std::min(grid.row_of_bin(static_cast<int>(std::floor(band_high_hz * bins_per_hz + 1e-9))),
                    grid.rows() - 1);
    if (r_lo > r_hi) throw std::invalid_argument("empty band");
  }

  double maxmag = 0.0;
  for (int r = r_lo; r <= r_hi; ++r)
    for (int k = 0; k < grid.cols; ++k) maxmag = std::max(maxmag, std::abs(grid.at(r, k)));
  if (maxmag <= 0.0) maxmag = 1.0;

  std::string buf;
  buf += "P5\n" + std::to_string(grid.cols) + " " + std::to_string(r_hi - r_lo + 1) + "\n255\n";
  for (int r = r_hi; r >= r_lo; --r) {
    for (int k = 0; k < grid.cols; ++k) {
      const double mag = std::abs(grid.at(r, k));
      double db = mag > 0.0 ? 20.0 * std::log10(mag / maxmag) : floor_db;
      db = std::clamp(db, floor_db, 0.0);
      const int byte = static_cast<int>(std::lround((db - floor_db) / -floor_db * 255.0));
      buf.push_back(static_cast<char>(byte));
    }
  }
  write_file(path, buf);
}

void write_magnitude_csv(const std::string& path, const TfrGrid& grid) {
  std::ostringstream out;
  out << "bin,freq_hz,time_s,magnitude\n";
  out.precision(12);
  for (int r = 0; r < grid.rows(); ++r) {
    const int m = grid.bin_of_row(r);
    const double f = static_cast<double>(m) * grid.fs / grid.fft_length;
    for (int k = 0; k < grid.cols; ++k)
      out << m << ',' << f << ',' << grid.time_of_col(k) << ',' << std::abs(grid.at(r, k))
          << '\n';
  }
  write_file(path, out.str());
}

SignalRecord read_signal_csv(const std::string& path, double fs_hint) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> times, values;
  std::string line;
  while (std::getline(in, line)) {
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ss(line);
    double a, b;
    if (!(ss >> a)) continue;  // header or blank line
    if (ss >> b) {
      times.push_back(a);
      values.push_back(b);
    } else {
      values.push_back(a);
    }
  }
  if (values.empty()) throw std::runtime_error("no samples in " + path);

  SignalRecord rec;
  if (times.size() == values.size()) {
    if (values.size() < 2) throw std::runtime_error("time column needs at least two rows");
    const double span = times.back() - times.front();
    if (span <= 0.0) throw std::runtime_error("time column is not increasing");
    rec.fs = fs_hint > 0.0 ? fs_hint : (static_cast<double>(values.size()) - 1.0) / span;
    rec.start_time = times.front();
  } else {
    if (fs_hint <= 0.0)
      throw std::runtime_error("csv has no time column; a sampling rate is required");
    rec.fs = fs_hint;
  }
  rec.samples.reserve(values.size());
  for (double v : values) rec.samples.emplace_back(v, 0.0);
  rec.validate();
  return rec;
}

void write_signal_csv(const std::string& path, const SignalRecord& x) {
  std::ostringstream out;
  out << "time_s,value\n";
  out.precision(17);
  for (int n = 0; n < x.size(); ++n)
    out << x.time_of(n) << ',' << x.samples[n].real() << '\n';
  write_file(path, out.str());
}

SignalRecord read_signal_f64(const std::string& path, double fs) {
  if (fs <= 0.0) throw std::runtime_error("raw input requires a positive sampling rate");
  const std::string buf = read_file(path);
  if (buf.empty() || buf.size() % 8 != 0)
    throw std::runtime_error("raw float64 file has a partial sample: " + path);
  SignalRecord rec;
  rec.fs = fs;
  rec.samples.resize(buf.size() / 8);
  for (std::size_t i = 0; i < rec.samples.size(); ++i) {
    double v;
    std::memcpy(&v, buf.data() + i * 8, 8);
    rec.samples[i] = cplx{v, 0.0};
  }
  rec.validate();
  return rec;
}

void write_metadata(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ostringstream out;
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
  write_file(path, out.str());
}

}  // namespace tfss
