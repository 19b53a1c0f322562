#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace lemcodec::io {

/// Headerless little-endian binary64 samples.
std::vector<double> read_f64(const std::filesystem::path& path);
void write_f64(const std::filesystem::path& path, std::span<const double> samples);

/// One value per line; blank lines are skipped and a non-numeric first line is
/// treated as a header.
std::vector<double> read_csv_column(const std::filesystem::path& path);
void write_csv_column(const std::filesystem::path& path, std::span<const double> samples);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lemcodec::io
