#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace profin::gfp {

using Vec = std::vector<std::uint32_t>;
using Matrix = std::vector<Vec>;

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

/// Row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, std::uint32_t p);
std::size_t rank(Matrix m, std::uint32_t p);

/// Basis of {x : x M = 0} for an r x c matrix M (x has r entries).
Matrix left_kernel(const Matrix& m, std::uint32_t p);

/// Coefficients c with sum c_i rows[i] = target, if any.
std::optional<Vec> solve_combination(const Matrix& rows, const Vec& target, std::uint32_t p);

Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p);
/// Row vector times matrix.
Vec apply(const Vec& v, const Matrix& m, std::uint32_t p);
Matrix identity(std::size_t n);
bool is_invertible(const Matrix& m, std::uint32_t p);

}  // namespace profin::gfp
