#pragma once

// Series files.
//
// CSV: '#'-prefixed comment lines, then one sample per line.
// Binary: 16-byte header {"ORDENTS1", u32 version = 1, u32 reserved = 0},
// then the samples as little-endian IEEE-754 doubles.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "ordent/ordinal.hpp"

namespace ordent {

inline constexpr std::string_view kSeriesMagic = "ORDENTS1";
inline constexpr std::uint32_t kSeriesBinaryVersion = 1;

/// Writes samples with 17 significant digits, preceded by the given comment
/// lines (each emitted as "# <line>").
void write_series_csv(std::ostream& out, const TimeSeries& ts,
                      std::span<const std::string> comments = {});
void write_series_binary(std::ostream& out, const TimeSeries& ts);

/// Parses CSV text. Blank and '#' lines are skipped; anything else must be a
/// single finite number. Throws ParseError with the 1-based line number.
TimeSeries read_series_csv(std::istream& in);
/// Throws ParseError on a bad header or truncated payload.
TimeSeries read_series_binary(std::istream& in);

/// Detects the format from the magic bytes. Throws IoError when the file
/// cannot be opened.
TimeSeries read_series_file(const std::filesystem::path& path);

}  // namespace ordent
