#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mfpc {

// Shortest decimal string that round-trips the value. Deterministic, so
// output files are byte-identical across runs of the same build.
std::string format_double(double v);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Strict parsers: the whole token must be consumed.
double parse_double(std::string_view s);
std::int64_t parse_int(std::string_view s);
std::uint64_t parse_uint(std::string_view s);

std::string to_hex(std::uint64_t v);

}  // namespace mfpc
