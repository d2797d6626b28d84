#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "metricdim/errors.hpp"

namespace metricdim::labels {

inline std::string pad(int value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) > width) {
    throw InputError("coordinate out of range: " + digits);
  }
  return std::string(width - digits.size(), '0') + digits;
}

// Fixed-width zero-padded non-negative integer.
inline std::optional<int> parse_padded(std::string_view text, int width) {
  if (static_cast<int>(text.size()) != width) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace metricdim::labels
