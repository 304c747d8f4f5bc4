#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hashens {

// Canonical decimal rendering: integral values print without a decimal point
// ("3", "-7"), everything else in shortest round-trip form via to_chars.
// Shared by point serialization and all CSV/JSON writers so artifacts are
// byte-stable.
std::string render_number(double v);

// Fixed-precision rendering for human-facing tables ("%.3f").
std::string render_fixed(double v, int decimals = 3);

std::string trim(std::string_view s);

// RFC-4180 quoting, applied only when the field needs it.
std::string csv_escape(std::string_view field);

// Splits one CSV record, honoring double-quoted fields.
std::vector<std::string> split_csv_line(const std::string& line);

// Parses a finite double consuming the whole (trimmed) string; `what` names
// the offending context in error messages.
double parse_double(std::string_view s, const std::string& what);

}  // namespace hashens
