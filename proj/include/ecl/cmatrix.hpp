#pragma once

#include <complex>
#include <vector>

#include "ecl/rational.hpp"

namespace ecl {

using Cplx = std::complex<double>;

// Dense square complex matrix, row major.
struct MatC {
  int n = 0;
  std::vector<Cplx> a;

  MatC() = default;
  explicit MatC(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

  Cplx& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const Cplx& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
};

MatC matc_identity(int n);
MatC matc_from_q(const MatQ& m);
MatC matc_mul(const MatC& x, const MatC& y);
MatC matc_comm(const MatC& x, const MatC& y);
void matc_add_scaled(MatC& dst, const MatC& src, const Cplx& c);
MatC matc_scale(const MatC& x, const Cplx& c);
MatC matc_sub(const MatC& x, const MatC& y);
double matc_max_norm(const MatC& x);
bool matc_is_zero(const MatC& x, double tol);
// Gauss-Jordan with partial pivoting; throws on (numerically) singular input.
MatC matc_inverse(const MatC& x);

}  // namespace ecl
