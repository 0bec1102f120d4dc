#include "ordent/series_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "ordent/errors.hpp"

namespace ordent {

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T from_le(const char* p) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

void write_series_csv(std::ostream& out, const TimeSeries& ts, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  std::array<char, 32> buf;
  for (double v : ts.samples()) {
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    out.write(buf.data(), end - buf.data());
    out.put('\n');
  }
  if (!out) throw IoError("failed writing series CSV");
}

void write_series_binary(std::ostream& out, const TimeSeries& ts) {
  out.write(kSeriesMagic.data(), static_cast<std::streamsize>(kSeriesMagic.size()));
  put_le<std::uint32_t>(out, kSeriesBinaryVersion);
  put_le<std::uint32_t>(out, 0);
  for (double v : ts.samples()) put_le<double>(out, v);
  if (!out) throw IoError("failed writing binary series");
}

TimeSeries read_series_csv(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto field = trim(line);
    if (field.empty() || field.front() == '#') continue;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || end != field.data() + field.size()) {
      throw ParseError("expected one number per line, got '" + std::string(field) + "'", lineno);
    }
    if (!std::isfinite(v)) throw ParseError("non-finite sample", lineno);
    samples.push_back(v);
  }
  return TimeSeries(std::move(samples));
}

TimeSeries read_series_binary(std::istream& in) {
  std::array<char, 16> header{};
  in.read(header.data(), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size()) ||
      std::string_view(header.data(), kSeriesMagic.size()) != kSeriesMagic) {
    throw ParseError("missing ORDENTS1 header", 1);
  }
  const auto version = from_le<std::uint32_t>(header.data() + 8);
  if (version != kSeriesBinaryVersion) {
    throw ParseError("unsupported binary series version " + std::to_string(version), 1);
  }
  const std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (payload.size() % sizeof(double) != 0) {
    throw ParseError("binary payload is not a whole number of doubles", 1);
  }
  std::vector<double> samples(payload.size() / sizeof(double));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = from_le<double>(payload.data() + i * sizeof(double));
    if (!std::isfinite(samples[i])) throw ParseError("non-finite sample at index " + std::to_string(i), 1);
  }
  return TimeSeries(std::move(samples));
}

TimeSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  const bool binary = in.gcount() == 8 && std::string_view(magic.data(), 8) == kSeriesMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_series_binary(in) : read_series_csv(in);
}

}  // namespace ordent
