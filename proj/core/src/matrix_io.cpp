#include "bvnkit/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "bvnkit/errors.hpp"

namespace bvnkit {

Matrix read_matrix(std::istream& in, const std::string& context) {
  long long n = 0;
  if (!(in >> n))
    throw ParseError(context + ": expected matrix dimension on the first line");
  if (n <= 0) throw ParseError(context + ": dimension must be positive");

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<double> entries;
  entries.reserve(un * un);
  for (std::size_t k = 0; k < un * un; ++k) {
    double v = 0.0;
    if (!(in >> v))
      throw ParseError(context + ": expected " + std::to_string(un * un) +
                       " entries, failed at entry " + std::to_string(k));
    if (!std::isfinite(v))
      throw ParseError(context + ": entry " + std::to_string(k) + " is not finite");
    entries.push_back(v);
  }
  return Matrix(un, std::move(entries));
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_matrix(in, path.string());
}

namespace {

// Shortest round-trip decimal form.
void append_double(std::string& out, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

}  // namespace

void write_matrix(std::ostream& out, const Matrix& m) {
  std::string line;
  line += std::to_string(m.dim());
  line += '\n';
  out << line;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) line += ' ';
      append_double(line, m(i, j));
    }
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("matrix write failed");
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_matrix(out, m);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

}  // namespace bvnkit
