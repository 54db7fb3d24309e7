#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "ecl/rational.hpp"

namespace ecl {

using Cplx = std::complex<double>;

// Power series in one variable with complex coefficients, truncated.
using XSeries = std::vector<Cplx>;

XSeries xs_mul(const XSeries& a, const XSeries& b, std::size_t order);
XSeries xs_inv(const XSeries& a, std::size_t order);  // requires a[0] != 0
XSeries xs_derivative(const XSeries& a);
Cplx xs_eval(const XSeries& a, Cplx x);

struct LatticePointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Odd Jacobi-style theta function evaluated from its product formula.  The
// product truncation and the distance guard around lattice points are fixed at
// construction.
class ThetaEngine {
 public:
  ThetaEngine(Cplx tau, int trunc = 40, double lattice_guard = 1e-6);

  Cplx tau() const { return tau_; }
  Cplx q() const { return q_; }
  int trunc() const { return trunc_; }
  double guard() const { return guard_; }

  // Distance from z to the period lattice, in lattice-normalized units.
  double lattice_distance(Cplx z) const;

  Cplx theta(Cplx z) const;           // throws LatticePointError inside guard
  Cplx theta_logderiv(Cplx z) const;  // theta'/theta via term-wise log diff
  Cplx eta() const;                   // Dedekind eta
  Cplx eta_cubed_theta(Cplx z) const { return eta_ * eta_ * eta_ * theta(z); }

  // Taylor coefficients in x of theta(z + x), orders 0..order.
  XSeries theta_series_at(Cplx z, std::size_t order) const;
  // U with theta(x) = x * U(x); U[0] is the derivative at the origin.
  XSeries theta_unit_series(std::size_t order) const;

 private:
  Cplx tau_, q_, eta_;
  int trunc_;
  double guard_;
  Cplx prefactor_;  // (2 pi i)^{-1} prod (1-q^s)^{-2}
  void check_guard(Cplx z) const;
};

// Coefficients c_0..c_order of the two-variable kernel
//   k(z, x) = theta(z+x)/(theta(z) theta(x)) - 1/x
// as a power series in x.  The 1/x pole is removed by an exact coefficient
// shift, never by numerical cancellation; c_0 equals theta'/theta(z).
XSeries k_series(const ThetaEngine& eng, Cplx z, std::size_t order);

// Term-wise x-derivative of k: coeff_j(g) = (j+1) coeff_{j+1}(k).
XSeries g_series(const ThetaEngine& eng, Cplx z, std::size_t order);

// Even series phi(x) = g(0,0) - g(0,x); phi[0] = 0, odd entries vanish.
XSeries phi_series(const ThetaEngine& eng, std::size_t order);

// A rational multiple of an integer power of pi.
struct PiPower {
  Rat coeff;
  int pi_exp = 0;
  double value() const;
};

// c_{2n+1} = B_{2n+2} (2 pi i)^{2n+2} / (2n+2)!  for n = 0..count-1;
// these are the odd-order Taylor coefficients of pi*i*(e^{2pi i x}+1)/(e^{2pi i x}-1) - 1/x.
std::vector<PiPower> trig_c_coeffs(int count);

// a_{2n} = -(2n+1) B_{2n+2} (2 i pi)^{2n+2} / (2n+2)!  for n = 1..count.
std::vector<PiPower> weight_a_coeffs(int count);

// E_{2n+2}(tau) := coeff_{2n}(phi) / a_{2n}, n >= 1.
Cplx eisenstein(const ThetaEngine& eng, int n, std::size_t order = 12);

// Trigonometric limit of the kernel: series coefficients in x of
//   2 pi i (1/(e^{2pi i z}-1) + e^{2pi i x}/(e^{2pi i x}-1)) - 1/x.
XSeries k_trig_coeffs(Cplx z, std::size_t order);

// |d_tau(eta^3 theta) - (1/4 pi i) d_z^2 (eta^3 theta)| with central
// differences of step h in both variables.
double heat_equation_residual(Cplx tau, Cplx z, double h = 1e-4, int trunc = 40);

}  // namespace ecl
