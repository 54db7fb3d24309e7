#include "ecl/elliptic.hpp"

#include <cmath>

namespace ecl {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Cplx kI(0.0, 1.0);

XSeries exp_series(Cplx rate, std::size_t order) {
  // Series of exp(rate * x).
  XSeries s(order + 1);
  Cplx term = 1.0;
  s[0] = term;
  for (std::size_t j = 1; j <= order; ++j) {
    term *= rate / static_cast<double>(j);
    s[j] = term;
  }
  return s;
}
}  // namespace

XSeries xs_mul(const XSeries& a, const XSeries& b, std::size_t order) {
  XSeries c(order + 1, Cplx(0.0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == Cplx(0.0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

XSeries xs_inv(const XSeries& a, std::size_t order) {
  if (a.empty() || a[0] == Cplx(0.0))
    throw std::invalid_argument("xs_inv: zero constant term");
  XSeries b(order + 1, Cplx(0.0));
  b[0] = 1.0 / a[0];
  for (std::size_t n = 1; n <= order; ++n) {
    Cplx acc = 0.0;
    for (std::size_t j = 1; j <= n && j < a.size(); ++j) acc += a[j] * b[n - j];
    b[n] = -acc / a[0];
  }
  return b;
}

XSeries xs_derivative(const XSeries& a) {
  if (a.size() <= 1) return XSeries{Cplx(0.0)};
  XSeries d(a.size() - 1);
  for (std::size_t j = 1; j < a.size(); ++j)
    d[j - 1] = static_cast<double>(j) * a[j];
  return d;
}

Cplx xs_eval(const XSeries& a, Cplx x) {
  Cplx acc = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) acc = acc * x + a[j];
  return acc;
}

ThetaEngine::ThetaEngine(Cplx tau, int trunc, double lattice_guard)
    : tau_(tau), trunc_(trunc), guard_(lattice_guard) {
  if (tau.imag() <= 0.0)
    throw std::invalid_argument("ThetaEngine: tau must be in the upper half plane");
  if (trunc < 1) throw std::invalid_argument("ThetaEngine: trunc must be >= 1");
  q_ = std::exp(2.0 * kPi * kI * tau_);
  Cplx prod = 1.0;
  Cplx qs = 1.0;
  for (int s = 1; s <= trunc_; ++s) {
    qs *= q_;
    prod *= (1.0 - qs);
  }
  prefactor_ = 1.0 / (2.0 * kPi * kI * prod * prod);
  eta_ = std::exp(kPi * kI * tau_ / 12.0) * prod;
}

double ThetaEngine::lattice_distance(Cplx z) const {
  // Write z = a tau + b with a, b real; measure to the nearest integer pair.
  const double a = z.imag() / tau_.imag();
  const double b = z.real() - a * tau_.real();
  const double da = a - std::round(a);
  const double db = b - std::round(b);
  return std::hypot(da, db);
}

void ThetaEngine::check_guard(Cplx z) const {
  if (lattice_distance(z) < guard_)
    throw LatticePointError("evaluation inside the lattice-point guard");
}

Cplx ThetaEngine::theta(Cplx z) const {
  check_guard(z);
  const Cplx u = std::exp(2.0 * kPi * kI * z);
  Cplx prod = std::exp(kPi * kI * z);  // u^{1/2}
  Cplx qs = 1.0;
  prod *= (1.0 - 1.0 / u);  // s = 0 factor of the u^{-1} product
  for (int s = 1; s <= trunc_; ++s) {
    qs *= q_;
    prod *= (1.0 - qs * u) * (1.0 - qs / u);
  }
  return prod * prefactor_;
}

Cplx ThetaEngine::theta_logderiv(Cplx z) const {
  check_guard(z);
  const Cplx u = std::exp(2.0 * kPi * kI * z);
  const Cplx two_pi_i = 2.0 * kPi * kI;
  Cplx acc = kPi * kI;
  acc += two_pi_i * (1.0 / u) / (1.0 - 1.0 / u);  // s = 0
  Cplx qs = 1.0;
  for (int s = 1; s <= trunc_; ++s) {
    qs *= q_;
    acc -= two_pi_i * qs * u / (1.0 - qs * u);
    acc += two_pi_i * (qs / u) / (1.0 - qs / u);
  }
  return acc;
}

Cplx ThetaEngine::eta() const { return eta_; }

XSeries ThetaEngine::theta_series_at(Cplx z, std::size_t order) const {
  // theta(z + x) as a series in x, from the product formula with
  // u = e^{2 pi i z} e^{2 pi i x}.
  const Cplx u0 = std::exp(2.0 * kPi * kI * z);
  const Cplx two_pi_i = 2.0 * kPi * kI;
  XSeries ep = exp_series(kPi * kI, order);        // e^{pi i x}
  XSeries e2p = exp_series(two_pi_i, order);       // e^{2 pi i x}
  XSeries e2m = exp_series(-two_pi_i, order);      // e^{-2 pi i x}

  XSeries acc = ep;
  for (std::size_t j = 0; j < acc.size(); ++j)
    acc[j] *= std::exp(kPi * kI * z) / std::exp(0.0);
  // acc now holds e^{pi i (z + x)}.

  auto mul_factor = [&](Cplx scalar, const XSeries& es) {
    XSeries f(order + 1, Cplx(0.0));
    f[0] = 1.0;
    for (std::size_t j = 0; j < f.size(); ++j) f[j] -= scalar * es[j];
    acc = xs_mul(acc, f, order);
  };

  mul_factor(1.0 / u0, e2m);  // s = 0 factor (1 - q^0 u^{-1})
  Cplx qs = 1.0;
  for (int s = 1; s <= trunc_; ++s) {
    qs *= q_;
    mul_factor(qs * u0, e2p);
    mul_factor(qs / u0, e2m);
  }
  for (auto& c : acc) c *= prefactor_;
  return acc;
}

XSeries ThetaEngine::theta_unit_series(std::size_t order) const {
  XSeries t = theta_series_at(Cplx(0.0), order + 1);
  // theta is odd, so the constant term is pure roundoff; drop it exactly.
  XSeries u(order + 1);
  for (std::size_t j = 0; j <= order; ++j) u[j] = t[j + 1];
  if (std::abs(u[0] - 1.0) > 1e-8)
    throw std::runtime_error("theta_unit_series: derivative at 0 is off");
  return u;
}

XSeries k_series(const ThetaEngine& eng, Cplx z, std::size_t order) {
  if (eng.lattice_distance(z) < eng.guard())
    throw LatticePointError("k_series: z inside the lattice-point guard");
  XSeries num = eng.theta_series_at(z, order + 1);
  XSeries den = eng.theta_unit_series(order + 1);
  const Cplx theta_z = num[0];
  for (auto& c : den) c *= theta_z;
  XSeries a = xs_mul(num, xs_inv(den, order + 1), order + 1);
  if (std::abs(a[0] - 1.0) > 1e-8)
    throw std::runtime_error("k_series: normalization drift");
  // k = (A(x) - 1)/x: exact coefficient shift.
  XSeries k(order + 1);
  for (std::size_t j = 0; j <= order; ++j) k[j] = a[j + 1];
  return k;
}

XSeries g_series(const ThetaEngine& eng, Cplx z, std::size_t order) {
  XSeries k = k_series(eng, z, order + 1);
  XSeries g(order + 1);
  for (std::size_t j = 0; j <= order; ++j)
    g[j] = static_cast<double>(j + 1) * k[j + 1];
  return g;
}

XSeries phi_series(const ThetaEngine& eng, std::size_t order) {
  // phi = S(0) - S(x) with S = (U'/U)', where theta(x) = x U(x); the double
  // pole cancels against the lattice constant term by construction.
  XSeries u = eng.theta_unit_series(order + 2);
  XSeries s = xs_derivative(xs_mul(xs_derivative(u), xs_inv(u, order + 1), order + 1));
  XSeries phi(order + 1, Cplx(0.0));
  for (std::size_t j = 1; j <= order && j < s.size(); ++j) phi[j] = -s[j];
  return phi;
}

double PiPower::value() const {
  return static_cast<double>(coeff) * std::pow(kPi, pi_exp);
}

std::vector<PiPower> trig_c_coeffs(int count) {
  // c_{2n+1} = B_{2n+2} (2 pi i)^{2n+2}/(2n+2)!; the i-powers fold into a sign.
  std::vector<Rat> b = bernoulli(2 * count + 2);
  std::vector<PiPower> out;
  for (int n = 0; n < count; ++n) {
    const int m = 2 * n + 2;
    Rat c = b[static_cast<std::size_t>(m)];
    c *= Rat(Int(1) << m) / Rat(factorial(m));
    if (n % 2 == 0) c = -c;  // i^{2n+2} = (-1)^{n+1}
    out.push_back(PiPower{c, m});
  }
  return out;
}

std::vector<PiPower> weight_a_coeffs(int count) {
  // a_{2n} = -(2n+1) c_{2n+1}: the x^{2n} weight in front of the normalized
  // weight-(2n+2) modular coefficient, so entry n-1 carries pi_exp 2n+2.
  std::vector<PiPower> c = trig_c_coeffs(count + 1);
  std::vector<PiPower> out;
  for (int n = 1; n <= count; ++n) {
    PiPower a = c[static_cast<std::size_t>(n)];
    a.coeff *= Rat(-(2 * n + 1));
    out.push_back(a);
  }
  return out;
}

Cplx eisenstein(const ThetaEngine& eng, int n, std::size_t order) {
  if (n < 1) throw std::invalid_argument("eisenstein: n >= 1 required");
  if (order < static_cast<std::size_t>(2 * n)) order = static_cast<std::size_t>(2 * n);
  XSeries phi = phi_series(eng, order);
  std::vector<PiPower> a = weight_a_coeffs(n);
  return phi[static_cast<std::size_t>(2 * n)] / a[static_cast<std::size_t>(n - 1)].value();
}

XSeries k_trig_coeffs(Cplx z, std::size_t order) {
  const Cplx two_pi_i = 2.0 * kPi * kI;
  const Cplx ez = std::exp(two_pi_i * z);
  XSeries out(order + 1, Cplx(0.0));
  out[0] = two_pi_i * (1.0 / (ez - 1.0) + 0.5);
  std::vector<PiPower> c = trig_c_coeffs(static_cast<int>(order / 2) + 1);
  for (std::size_t m = 1; m <= order; m += 2)
    out[m] = c[(m - 1) / 2].value();
  return out;
}

double heat_equation_residual(Cplx tau, Cplx z, double h, int trunc) {
  auto vbar = [&](Cplx t, Cplx w) {
    ThetaEngine e(t, trunc);
    return e.eta_cubed_theta(w);
  };
  const Cplx dtau = (vbar(tau + h, z) - vbar(tau - h, z)) / (2.0 * h);
  const Cplx dzz =
      (vbar(tau, z + h) - 2.0 * vbar(tau, z) + vbar(tau, z - h)) / (h * h);
  return std::abs(dtau - dzz / (4.0 * kPi * kI));
}

}  // namespace ecl
