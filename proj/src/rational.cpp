#include "ecl/rational.hpp"

#include <algorithm>

namespace ecl {

std::vector<Rat> bernoulli(int m) {
  // Recurrence from x/(e^x - 1) * (e^x - 1)/x = 1:
  // sum_{j=0}^{r} B_j / (j! (r+1-j)!) = [r == 0].
  std::vector<Rat> b(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    Rat acc = (r == 0) ? Rat(1) : Rat(0);
    for (int j = 0; j < r; ++j) {
      acc -= b[static_cast<std::size_t>(j)] /
             Rat(factorial(j) * factorial(r + 1 - j));
    }
    b[static_cast<std::size_t>(r)] = acc * Rat(factorial(r) * factorial(1));
    // b[r] solves b[r]/(r! 1!) = acc.
  }
  return b;
}

MatQ matq_zero(std::size_t rows, std::size_t cols) {
  return MatQ(rows, std::vector<Rat>(cols, Rat(0)));
}

MatQ matq_identity(std::size_t n) {
  MatQ m = matq_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatQ matq_mul(const MatQ& a, const MatQ& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  MatQ c = matq_zero(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

MatQ matq_add(const MatQ& a, const MatQ& b, const Rat& cb) {
  MatQ c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += cb * b[i][j];
  return c;
}

MatQ matq_scale(const MatQ& a, const Rat& c) {
  MatQ r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

bool matq_is_zero(const MatQ& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

MatQ matq_commutator(const MatQ& a, const MatQ& b) {
  return matq_add(matq_mul(a, b), matq_mul(b, a), Rat(-1));
}

std::vector<std::size_t> matq_rref(MatQ& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rat>> matq_nullspace(const MatQ& a) {
  if (a.empty()) return {};
  MatQ m = a;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots = matq_rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_c] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      v[pivots[pr]] = -m[pr][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> matq_solve(MatQ a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = matq_rref(a);
  if (pivots.size() != n || (n > 0 && pivots.back() == n))
    throw std::runtime_error("matq_solve: singular system");
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

MatQ matq_inverse(const MatQ& a) {
  const std::size_t n = a.size();
  MatQ m = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  std::vector<std::size_t> pivots = matq_rref(m);
  if (pivots.size() != n) throw std::runtime_error("matq_inverse: singular");
  MatQ inv = matq_zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace ecl
