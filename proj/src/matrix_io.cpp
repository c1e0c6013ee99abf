#include "svbound/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "svbound/errors.hpp"

namespace svbound {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.size() > 1 && s.front() == '+' && s[1] != '-' && s[1] != '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Token {
  std::string_view text;
  std::size_t line;
};

// ---- Matrix Market ----------------------------------------------------

enum class MmLayout { array, coordinate };
enum class MmField { real, integer, complex };
enum class MmSymmetry { general, symmetric, hermitian, skew_symmetric };

struct MmHeader {
  MmLayout layout;
  MmField field;
  MmSymmetry symmetry;
};

MmHeader parse_mm_header(std::string_view line) {
  std::istringstream words{std::string(line)};
  std::string banner, object, layout, field, symmetry;
  words >> banner >> object >> layout >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket") throw ParseError(1, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix") throw ParseError(1, "unsupported object '" + object + "'");

  MmHeader h{};
  const std::string lay = lower(layout);
  if (lay == "array") {
    h.layout = MmLayout::array;
  } else if (lay == "coordinate") {
    h.layout = MmLayout::coordinate;
  } else {
    throw ParseError(1, "unsupported layout '" + layout + "'");
  }

  const std::string fld = lower(field);
  if (fld == "real" || fld == "double") {
    h.field = MmField::real;
  } else if (fld == "integer") {
    h.field = MmField::integer;
  } else if (fld == "complex") {
    h.field = MmField::complex;
  } else {
    throw ParseError(1, "unsupported field '" + field + "'");
  }

  const std::string sym = lower(symmetry);
  if (sym == "general") {
    h.symmetry = MmSymmetry::general;
  } else if (sym == "symmetric") {
    h.symmetry = MmSymmetry::symmetric;
  } else if (sym == "hermitian") {
    h.symmetry = MmSymmetry::hermitian;
  } else if (sym == "skew-symmetric") {
    h.symmetry = MmSymmetry::skew_symmetric;
  } else {
    throw ParseError(1, "unsupported symmetry '" + symmetry + "'");
  }
  if (h.symmetry == MmSymmetry::hermitian && h.field != MmField::complex) {
    throw ParseError(1, "hermitian symmetry requires the complex field");
  }
  return h;
}

std::size_t parse_index(const Token& t, const char* what) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || end != t.text.data() + t.text.size()) {
    throw ParseError(t.line, std::string("invalid ") + what + " '" + std::string(t.text) + "'");
  }
  return value;
}

double parse_value(const Token& t) {
  const auto v = parse_real(t.text);
  if (!v) throw ParseError(t.line, "non-numeric token '" + std::string(t.text) + "'");
  return *v;
}

class MatrixAssembler {
 public:
  MatrixAssembler(std::size_t rows, std::size_t cols, MmSymmetry symmetry)
      : rows_(rows), cols_(cols), symmetry_(symmetry), entries_(rows * cols), seen_(rows * cols) {}

  void set(std::size_t i, std::size_t j, Complex v, std::size_t line) {
    if (symmetry_ != MmSymmetry::general && j > i) {
      throw ParseError(line, "entry above the diagonal in a symmetric-storage matrix");
    }
    if (symmetry_ == MmSymmetry::skew_symmetric && i == j) {
      throw ParseError(line, "diagonal entry in a skew-symmetric matrix");
    }
    if (symmetry_ == MmSymmetry::hermitian && i == j && v.imag() != 0.0) {
      throw ParseError(line, "non-real diagonal entry in a hermitian matrix");
    }
    store(i, j, v, line);
    if (i != j) {
      switch (symmetry_) {
        case MmSymmetry::general: break;
        case MmSymmetry::symmetric: store(j, i, v, line); break;
        case MmSymmetry::hermitian: store(j, i, std::conj(v), line); break;
        case MmSymmetry::skew_symmetric: store(j, i, -v, line); break;
      }
    }
  }

  ComplexMatrix finish() && { return ComplexMatrix(rows_, cols_, std::move(entries_)); }

 private:
  void store(std::size_t i, std::size_t j, Complex v, std::size_t line) {
    const std::size_t k = i * cols_ + j;
    if (seen_[k]) {
      throw ParseError(line, "duplicate entry (" + std::to_string(i + 1) + ", " +
                                 std::to_string(j + 1) + ")");
    }
    seen_[k] = true;
    entries_[k] = v;
  }

  std::size_t rows_;
  std::size_t cols_;
  MmSymmetry symmetry_;
  std::vector<Complex> entries_;
  std::vector<bool> seen_;
};

ComplexMatrix parse_matrix_market(const std::vector<std::string>& lines) {
  if (lines.empty()) throw ParseError(0, "empty input");
  const MmHeader header = parse_mm_header(lines[0]);

  // Remaining lines become a token stream; '%' starts a comment line.
  std::vector<Token> tokens;
  std::size_t last_line = 1;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    std::string_view s = trim(lines[ln]);
    if (s.empty() || s.front() == '%') continue;
    last_line = ln + 1;
    while (!s.empty()) {
      const std::size_t end = s.find_first_of(" \t");
      tokens.push_back({s.substr(0, end), ln + 1});
      s = end == std::string_view::npos ? std::string_view{} : trim(s.substr(end));
    }
  }

  std::size_t pos = 0;
  const auto next = [&](const char* what) -> const Token& {
    if (pos >= tokens.size()) {
      throw ParseError(last_line, std::string("dimension mismatch: body ended while reading ") + what);
    }
    return tokens[pos++];
  };

  const Token& rows_tok = next("the row count");
  const std::size_t size_line = rows_tok.line;
  const std::size_t rows = parse_index(rows_tok, "row count");
  const std::size_t cols = parse_index(next("the column count"), "column count");
  if (rows == 0 || cols == 0) throw ParseError(size_line, "matrix dimensions must be positive");
  if (header.symmetry != MmSymmetry::general && rows != cols) {
    throw ParseError(size_line, "symmetric-storage matrix must be square");
  }
  std::size_t nnz = 0;
  if (header.layout == MmLayout::coordinate) nnz = parse_index(next("the entry count"), "entry count");
  if (pos < tokens.size() && tokens[pos].line == size_line) {
    throw ParseError(size_line, "unexpected token '" + std::string(tokens[pos].text) + "' on size line");
  }

  const auto read_value = [&](const char* what) -> std::pair<Complex, std::size_t> {
    const Token& re = next(what);
    if (header.field != MmField::complex) return {Complex(parse_value(re), 0.0), re.line};
    const Token& im = next(what);
    return {Complex(parse_value(re), parse_value(im)), re.line};
  };

  MatrixAssembler assembler(rows, cols, header.symmetry);
  if (header.layout == MmLayout::array) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t i0 = 0;
      if (header.symmetry == MmSymmetry::skew_symmetric) {
        i0 = j + 1;
      } else if (header.symmetry != MmSymmetry::general) {
        i0 = j;
      }
      for (std::size_t i = i0; i < rows; ++i) {
        const auto [v, line] = read_value("array entries");
        assembler.set(i, j, v, line);
      }
    }
  } else {
    for (std::size_t k = 0; k < nnz; ++k) {
      const Token& it = next("coordinate entries");
      const std::size_t i = parse_index(it, "row index");
      const std::size_t j = parse_index(next("coordinate entries"), "column index");
      if (i < 1 || i > rows || j < 1 || j > cols) {
        throw ParseError(it.line, "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") out of range");
      }
      const auto [v, line] = read_value("coordinate entries");
      assembler.set(i - 1, j - 1, v, line);
    }
  }
  if (pos < tokens.size()) {
    throw ParseError(tokens[pos].line, "dimension mismatch: unexpected extra value '" +
                                           std::string(tokens[pos].text) + "'");
  }
  return std::move(assembler).finish();
}

// ---- CSV --------------------------------------------------------------

ComplexMatrix parse_csv_complex(const std::vector<std::string>& lines) {
  std::vector<Complex> entries;
  std::size_t rows = 0, cols = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string_view s = trim(lines[ln]);
    if (s.empty()) continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = s.find(',', start);
      const std::string_view field = trim(s.substr(start, comma - start));
      const auto z = parse_complex_token(field);
      if (!z) throw ParseError(ln + 1, "non-numeric token '" + std::string(field) + "'");
      entries.push_back(*z);
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(ln + 1, "dimension mismatch: row has " + std::to_string(count) +
                                   " entries, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(0, "empty input");
  return ComplexMatrix(rows, cols, std::move(entries));
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  return lines;
}

}  // namespace

std::optional<MatrixFormat> parse_format_name(std::string_view name) {
  const std::string n = lower(name);
  if (n == "matrix-market" || n == "mm" || n == "mtx") return MatrixFormat::matrix_market;
  if (n == "csv" || n == "csv-complex") return MatrixFormat::csv_complex;
  return std::nullopt;
}

std::string_view format_name(MatrixFormat format) {
  return format == MatrixFormat::matrix_market ? "matrix-market" : "csv-complex";
}

std::optional<Complex> parse_complex_token(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  const bool imaginary_unit = token.back() == 'i' || token.back() == 'j';
  if (imaginary_unit) token.remove_suffix(1);

  // Split at a sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = 1; p < token.size(); ++p) {
    if ((token[p] == '+' || token[p] == '-') && token[p - 1] != 'e' && token[p - 1] != 'E') {
      split = p;
      break;
    }
  }

  if (split == std::string_view::npos) {
    const auto v = parse_real(token);
    if (!v) return std::nullopt;
    return imaginary_unit ? Complex(0.0, *v) : Complex(*v, 0.0);
  }
  if (!imaginary_unit) return std::nullopt;
  const auto re = parse_real(token.substr(0, split));
  const auto im = parse_real(token.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

ComplexMatrix parse_matrix(std::istream& in, MatrixFormat format) {
  const auto lines = read_lines(in);
  return format == MatrixFormat::matrix_market ? parse_matrix_market(lines) : parse_csv_complex(lines);
}

ComplexMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in, format);
}

void write_matrix(std::ostream& out, const ComplexMatrix& a, MatrixFormat format) {
  if (format == MatrixFormat::matrix_market) {
    out << "%%MatrixMarket matrix array complex general\n";
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        out << format_real(a(i, j).real()) << ' ' << format_real(a(i, j).imag()) << '\n';
      }
    }
    return;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex z = a(i, j);
      if (j > 0) out << ',';
      out << format_real(z.real()) << (std::signbit(z.imag()) ? '-' : '+')
          << format_real(std::abs(z.imag())) << 'i';
    }
    out << '\n';
  }
}

std::string format_matrix(const ComplexMatrix& a, MatrixFormat format) {
  std::ostringstream out;
  write_matrix(out, a, format);
  return out.str();
}

}  // namespace svbound
