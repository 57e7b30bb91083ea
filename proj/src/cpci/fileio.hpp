#pragma once

#include <string>
#include <string_view>

namespace cpci {

/// Writes through `<path>.tmp-<pid>` and renames over `path`.
void atomic_write(const std::string& path, std::string_view data);

std::string read_file(const std::string& path);

}  // namespace cpci
