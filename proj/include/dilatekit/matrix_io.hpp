#pragma once

#include <string>

#include "dilatekit/linalg.hpp"

namespace dilatekit {

/// Raised for unreadable files and malformed or inconsistent matrix JSON.
class MatrixIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix files are JSON objects {"rows": r, "cols": c, "data": [[re, im], ...]}
// with data in row-major order. Parsers reject length mismatches and
// non-finite entries.

ComplexMatrix parse_matrix_json(const std::string& text, const std::string& context);
ComplexMatrix load_matrix(const std::string& path);

std::string matrix_to_json(const ComplexMatrix& m);
void save_matrix(const ComplexMatrix& m, const std::string& path);

/// Full-precision decimal rendering of a double ("%.17g").
std::string format_double(double x);

}  // namespace dilatekit
