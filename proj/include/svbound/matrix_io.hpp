#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "svbound/matrix.hpp"

namespace svbound {

enum class MatrixFormat {
  // NIST Matrix Market exchange format: array or coordinate layout,
  // real/integer/complex field, general/symmetric/hermitian/skew-symmetric.
  matrix_market,
  // One matrix row per line, comma-separated tokens such as "1", "-2.5e3",
  // "3i", "1+2i", "0-1j".
  csv_complex,
};

// Accepts "matrix-market", "mm", "mtx", "csv", "csv-complex".
std::optional<MatrixFormat> parse_format_name(std::string_view name);
std::string_view format_name(MatrixFormat format);

// Square-ness is not enforced. Throws ParseError carrying the offending line.
ComplexMatrix parse_matrix(std::istream& in, MatrixFormat format);
ComplexMatrix parse_matrix(std::string_view text, MatrixFormat format);

// Writes every entry with 17 significant digits; parse_matrix reproduces
// the matrix bit for bit.
void write_matrix(std::ostream& out, const ComplexMatrix& a, MatrixFormat format);
std::string format_matrix(const ComplexMatrix& a, MatrixFormat format);

// Parses a single CSV token per the grammar [+-]?float([+-]float)?[ij]?.
std::optional<Complex> parse_complex_token(std::string_view token);

}  // namespace svbound
