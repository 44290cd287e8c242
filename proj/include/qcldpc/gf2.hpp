#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/qc_matrix.hpp"

namespace qcldpc {

/// Rank of a binary matrix over GF(2), by bitset Gaussian elimination.
std::int64_t gf2_rank(const SparseBinaryMatrix& h);

/// Basis of the right null space {x : H x = 0 over GF(2)}, one bit vector
/// (length cols) per basis element.
std::vector<std::vector<std::uint8_t>> gf2_nullspace(const SparseBinaryMatrix& h);

}  // namespace qcldpc
