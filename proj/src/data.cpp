#include "zomo/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zomo/field.hpp"

#ifndef ZOMO_DATA_DIR
#define ZOMO_DATA_DIR "data"
#endif

namespace zomo {

std::string data_dir() {
  if (const char* env = std::getenv("ZOMO_DATA_DIR"); env && *env) return env;
  return ZOMO_DATA_DIR;
}

std::string data_path(const std::string& relative) { return data_dir() + "/" + relative; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace zomo
