#include "textio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace cpci::textio {

std::optional<std::string> LineReader::next_raw() {
  std::string s;
  if (!std::getline(in_, s)) return std::nullopt;
  ++line_;
  if (line_ == 1 && s.starts_with("\xEF\xBB\xBF")) s.erase(0, 3);
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::optional<std::string> LineReader::next_content() {
  while (auto s = next_raw()) {
    auto first = s->find_first_not_of(" \t");
    if (first == std::string::npos || (*s)[first] == '#') continue;
    return s;
  }
  return std::nullopt;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::vector<std::string_view> split_char(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> parse_real(std::string_view tok) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_count(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
  return v;
}

std::string format_g(double v, int digits) {
  char buf[64];
  int n = std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace cpci::textio
