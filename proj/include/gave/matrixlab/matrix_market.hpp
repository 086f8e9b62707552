#pragma once

#include <filesystem>
#include <iosfwd>

#include "gave/matrixlab/sparse_matrix.hpp"

namespace gave {

/// Reads `%%MatrixMarket matrix coordinate real {general|symmetric}` with
/// 1-based indices. Throws ParseError on malformed input.
[[nodiscard]] SparseMatrix read_matrix_market(std::istream& in);
[[nodiscard]] SparseMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes coordinate real general, 17 significant digits.
void write_matrix_market(std::ostream& out, const SparseMatrix& m);
void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m);

/// Plain-text vector, one value per line. Blank lines and lines starting
/// with '%' or '#' are ignored.
[[nodiscard]] Vector read_vector(std::istream& in);
[[nodiscard]] Vector read_vector(const std::filesystem::path& path);
void write_vector(std::ostream& out, std::span<const double> v);
void write_vector(const std::filesystem::path& path, std::span<const double> v);

}  // namespace gave
