#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpci::textio {

/// Line reader shared by the EGF, MMF and summary CSV parsers. Strips CR and a
/// leading UTF-8 BOM, and counts physical lines for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line that is neither blank nor a `#` comment.
  std::optional<std::string> next_content();
  /// Next physical line, whatever it holds.
  std::optional<std::string> next_raw();
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view s);
std::vector<std::string_view> split_char(std::string_view s, char sep);

/// Strict parse of a finite real; nullopt on garbage, trailing junk or NaN/inf.
std::optional<double> parse_real(std::string_view tok);
std::optional<std::size_t> parse_count(std::string_view tok);

/// Shortest "%.Ng" style rendering with `digits` significant digits.
std::string format_g(double v, int digits);

}  // namespace cpci::textio
