#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ideasim {

// 17 significant digits: enough for a bit-exact double round trip.
std::string format_g17(double value);

// Strict scalar parsing; throws ParseError naming `what` on any trailing
// garbage or range problem.
double parse_double(const std::string& text, const std::string& what);
std::uint64_t parse_u64(const std::string& text, const std::string& what);
std::int64_t parse_i64(const std::string& text, const std::string& what);

std::vector<std::string> split(const std::string& text, char sep);

// Writes `content` to `path`, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ideasim
