#include "signclass/text_io.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace signclass {

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Part parse_int(std::string_view s, std::string_view whole) {
  Part v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto whole = text;
  text = trim(text);
  std::vector<Part> parts;
  if (text.empty()) return {};
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token, whole));
    } else {
      const Part value = parse_int(trim(token.substr(0, caret)), whole);
      const Part times = parse_int(trim(token.substr(caret + 1)), whole);
      if (times < 0) throw std::invalid_argument("negative exponent in '" + std::string(whole) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

}  // namespace signclass
