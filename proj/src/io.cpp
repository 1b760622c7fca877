#include "adgibbs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "adgibbs/errors.hpp"

namespace adgibbs {

std::string format_double(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  }
  os << content;
  if (!os) {
    throw Error(ErrorKind::IoError, "failed writing " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw Error(ErrorKind::IoError, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace adgibbs
