#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace lemcodec {

/// Single-sided amplitude spectrum |F_k|, k = 1 .. n/2 (DC excluded).
struct Spectrum {
  std::vector<double> amplitudes;
  std::size_t n = 0;
};

/// F_k = sum_n x_n exp(-2 pi i k n / N). Radix-2 FFT when N is a power of two,
/// direct summation otherwise.
std::vector<std::complex<double>> dft(std::span<const double> series);

/// Spectrum of the first `length` samples; length must be a power of two <= series.size().
Spectrum spectrum(std::span<const double> series, std::size_t length);

/// True iff the DFT of `copies` back-to-back duplicates of `block` equals
/// copies * (DFT of block)[k / copies] at multiples of `copies` and vanishes
/// elsewhere, both within 1e-9 * sum|x| of the concatenation.
bool duplication_spectrum_check(std::span<const double> block, std::size_t copies);

/// Largest |F_k| over bins k that are not multiples of `copies`.
double off_multiple_peak(std::span<const double> series, std::size_t copies);

void write_spectrum_csv(std::ostream& os, const Spectrum& s);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace lemcodec
