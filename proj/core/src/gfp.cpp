#include "profin/gfp.hpp"

#include <utility>

#include "profin/errors.hpp"

namespace profin::gfp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw InvalidInput("zero has no inverse mod p");
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<std::size_t> row_reduce(Matrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const auto cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][c] % p == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const auto inv = inverse(m[row][c], p);
    for (auto& x : m[row]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = static_cast<std::uint32_t>((m[r][k] + (p - f) * m[row][k]) % p);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m, std::uint32_t p) { return row_reduce(m, p).size(); }

Matrix left_kernel(const Matrix& m, std::uint32_t p) {
  // Reduce [M | I]; rows whose M-part vanishes carry the kernel.
  const auto rows = m.size();
  if (rows == 0) return {};
  const auto cols = m.front().size();
  Matrix aug(rows, Vec(cols + rows, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = m[r][c] % p;
    aug[r][cols + r] = 1;
  }
  // Eliminate on the M-part only.
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t pick = row;
    while (pick < rows && aug[pick][c] == 0) ++pick;
    if (pick == rows) continue;
    std::swap(aug[row], aug[pick]);
    const auto inv = inverse(aug[row][c], p);
    for (auto& x : aug[row]) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      const std::uint64_t f = aug[r][c];
      for (std::size_t k = 0; k < aug[r].size(); ++k) {
        aug[r][k] = static_cast<std::uint32_t>((aug[r][k] + (p - f) * aug[row][k]) % p);
      }
    }
    ++row;
  }
  Matrix kernel;
  for (std::size_t r = row; r < rows; ++r) kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(cols), aug[r].end());
  return kernel;
}

std::optional<Vec> solve_combination(const Matrix& rows, const Vec& target, std::uint32_t p) {
  // Solve c * R = target through the transposed system R^T c^T = target^T.
  const auto n = rows.size();
  const auto dim = target.size();
  Matrix aug(dim, Vec(n + 1, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = rows[j][i] % p;
    aug[i][n] = target[i] % p;
  }
  auto pivots = row_reduce(aug, p);
  Vec c(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    c[pivots[r]] = aug[r][n];
  }
  return c;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p) {
  const auto cols = b.empty() ? 0 : b.front().size();
  Matrix out(a.size(), Vec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::uint64_t x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = static_cast<std::uint32_t>((out[i][j] + x * b[k][j]) % p);
    }
  }
  return out;
}

Vec apply(const Vec& v, const Matrix& m, std::uint32_t p) { return multiply(Matrix{v}, m, p).front(); }

Matrix identity(std::size_t n) {
  Matrix m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_invertible(const Matrix& m, std::uint32_t p) { return m.empty() || rank(m, p) == m.size(); }

}  // namespace profin::gfp
