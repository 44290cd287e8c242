#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qcldpc/exponent_matrix.hpp"
#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exponent matrix with the lifting degree it was stored with (0 = free).
struct ExponentFile {
    ExponentMatrix matrix;
    std::int64_t lifting = 0;
};

/// Text format, one header line then the exponent rows:
///   qcexp v1 <n_c> <n_v> <N>
///   <n_v integers> x n_c lines
/// N = 0 stores a free (integer-exponent) matrix.
std::string write_qcexp(const ExponentMatrix& e, std::int64_t lifting);
ExponentFile parse_qcexp(const std::string& text, const std::string& origin = "<string>");

std::string write_qcexp_file(const ExponentFile& f);
void save_qcexp(const std::string& path, const ExponentMatrix& e, std::int64_t lifting);
ExponentFile load_qcexp(const std::string& path);

/// Standard alist text: "n m" (cols rows), max column/row weights, per-column
/// and per-row weights, then 1-based index lists padded with 0 to the maxima.
std::string write_alist(const SparseBinaryMatrix& h);
SparseBinaryMatrix parse_alist(const std::string& text, const std::string& origin = "<string>");

void save_alist(const std::string& path, const SparseBinaryMatrix& h);
SparseBinaryMatrix load_alist(const std::string& path);

}  // namespace qcldpc
