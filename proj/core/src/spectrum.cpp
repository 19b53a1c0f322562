#include "lemcodec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "lemcodec/error.hpp"

namespace lemcodec {

namespace {

using cd = std::complex<double>;

void fft_in_place(std::vector<cd>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    std::vector<cd> twiddle(half);
    for (std::size_t k = 0; k < half; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
      twiddle[k] = cd(std::cos(angle), std::sin(angle));
    }
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cd u = a[start + k];
        const cd v = a[start + k + half] * twiddle[k];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

std::vector<cd> direct_dft(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cd acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      // Reduce k*t mod n first so the angle stays accurate for large n.
      const auto r = static_cast<double>((k * t) % n);
      const double angle = -2.0 * std::numbers::pi * r / static_cast<double>(n);
      acc += x[t] * cd(std::cos(angle), std::sin(angle));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::complex<double>> dft(std::span<const double> series) {
  if (series.empty()) return {};
  if (!is_power_of_two(series.size())) return direct_dft(series);
  std::vector<cd> a(series.begin(), series.end());
  fft_in_place(a);
  return a;
}

Spectrum spectrum(std::span<const double> series, std::size_t length) {
  if (!is_power_of_two(length)) throw InvalidArgument("spectrum length must be a power of two");
  if (length > series.size()) throw InvalidArgument("spectrum length exceeds the series length");
  const auto f = dft(series.first(length));
  Spectrum s;
  s.n = length;
  s.amplitudes.reserve(length / 2);
  for (std::size_t k = 1; k <= length / 2; ++k) s.amplitudes.push_back(std::abs(f[k]));
  return s;
}

bool duplication_spectrum_check(std::span<const double> block, std::size_t copies) {
  if (copies < 2) throw InvalidArgument("duplication check needs at least 2 copies");
  if (block.empty()) throw InvalidArgument("duplication check needs a non-empty block");

  std::vector<double> repeated;
  repeated.reserve(block.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) repeated.insert(repeated.end(), block.begin(), block.end());

  double abs_sum = 0.0;
  for (double v : repeated) abs_sum += std::abs(v);
  const double tol = 1e-9 * abs_sum;

  const auto whole = dft(repeated);
  const auto single = dft(block);
  const double k_copies = static_cast<double>(copies);
  for (std::size_t k = 0; k < whole.size(); ++k) {
    if (k % copies == 0) {
      if (std::abs(whole[k] - k_copies * single[k / copies]) > tol) return false;
    } else if (std::abs(whole[k]) > tol) {
      return false;
    }
  }
  return true;
}

double off_multiple_peak(std::span<const double> series, std::size_t copies) {
  if (copies < 2) throw InvalidArgument("copies must be at least 2");
  const auto f = dft(series);
  double peak = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k % copies != 0) peak = std::max(peak, std::abs(f[k]));
  }
  return peak;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  os << "bin,amplitude\n" << std::setprecision(17);
  for (std::size_t k = 0; k < s.amplitudes.size(); ++k) os << (k + 1) << ',' << s.amplitudes[k] << '\n';
}

}  // namespace lemcodec
