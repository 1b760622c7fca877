#pragma once

#include <filesystem>
#include <string>

namespace adgibbs {

/// Shortest decimal string that round-trips the 64-bit float exactly
/// (std::to_chars with no precision argument).
std::string format_double(double value);

/// Writes content atomically enough for our purposes; throws IoError.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace adgibbs
