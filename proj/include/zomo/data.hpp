#pragma once

#include <string>

namespace zomo {

// Root of the shipped data tree: $ZOMO_DATA_DIR if set, else the build-time default.
std::string data_dir();
// data_dir() joined with a relative path.
std::string data_path(const std::string& relative);
// Whole file as a string; throws Error if it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace zomo
