#include "lemcodec/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <string>

#include "lemcodec/error.hpp"

namespace lemcodec::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw Error("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::binary);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bytes;
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  auto out = open_out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed: " + path.string());
}

std::vector<double> read_f64(const std::filesystem::path& path) {
  const auto bytes = read_bytes(path);
  if (bytes.size() % 8 != 0) {
    throw InvalidArgument(path.string() + ": size " + std::to_string(bytes.size()) + " is not a multiple of 8");
  }
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(bytes[8 * i + b]) << (8 * b);
    out[i] = std::bit_cast<double>(v);
  }
  return out;
}

void write_f64(const std::filesystem::path& path, std::span<const double> samples) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(samples.size() * 8);
  for (double x : samples) {
    const auto v = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) bytes.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  write_bytes(path, bytes);
}

std::vector<double> read_csv_column(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in);
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto field = trim(line);
    if (field.empty()) continue;
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      if (out.empty() && line_no == 1) continue;  // header
      throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": not a number: " + field);
    }
    out.push_back(value);
  }
  return out;
}

void write_csv_column(const std::filesystem::path& path, std::span<const double> samples) {
  auto out = open_out(path, std::ios::trunc);
  out << std::setprecision(17);
  for (double x : samples) out << x << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace lemcodec::io
