#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bvnkit/matrix.hpp"

namespace bvnkit {

// Text format: first line is N, followed by N lines of N whitespace
// separated decimal entries. Tokens are actually free-form whitespace
// separated, so line breaks are cosmetic on input.
//
// context names the source in error messages.
Matrix read_matrix(std::istream& in, const std::string& context = "<stream>");
Matrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace bvnkit
