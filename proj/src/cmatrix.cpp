#include "ecl/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ecl {

MatC matc_identity(int n) {
  MatC m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

MatC matc_from_q(const MatQ& q) {
  const int n = static_cast<int>(q.size());
  MatC m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = Cplx(q[i][j].convert_to<double>(), 0.0);
  return m;
}

MatC matc_mul(const MatC& x, const MatC& y) {
  MatC r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int l = 0; l < x.n; ++l) {
      Cplx xil = x.at(i, l);
      if (xil == 0.0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += xil * y.at(l, j);
    }
  return r;
}

MatC matc_comm(const MatC& x, const MatC& y) {
  return matc_sub(matc_mul(x, y), matc_mul(y, x));
}

void matc_add_scaled(MatC& dst, const MatC& src, const Cplx& c) {
  for (std::size_t i = 0; i < dst.a.size(); ++i) dst.a[i] += c * src.a[i];
}

MatC matc_scale(const MatC& x, const Cplx& c) {
  MatC r = x;
  for (auto& e : r.a) e *= c;
  return r;
}

MatC matc_sub(const MatC& x, const MatC& y) {
  MatC r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

double matc_max_norm(const MatC& x) {
  double m = 0.0;
  for (const auto& e : x.a) m = std::max(m, std::abs(e));
  return m;
}

bool matc_is_zero(const MatC& x, double tol) { return matc_max_norm(x) <= tol; }

MatC matc_inverse(const MatC& x) {
  const int n = x.n;
  MatC a = x;
  MatC inv = matc_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a.at(r, col));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-14) throw std::runtime_error("matc_inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Cplx d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Cplx f = a.at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ecl
