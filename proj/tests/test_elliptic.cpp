#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ecl/elliptic.hpp"

using namespace ecl;

namespace {

constexpr double kPi = std::numbers::pi;
const Cplx kI(0.0, 1.0);

double rel(Cplx a, Cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// lattice sum route, independent of the product formula the engine uses:
// sum_n (-1)^n e^{pi i tau (n+1/2)^2} e^{2 pi i (n+1/2) z}, normalized to
// derivative 1 at the origin
Cplx theta_sum_normalized(Cplx tau, Cplx z, int terms = 40) {
  Cplx num(0.0), den(0.0);
  for (int n = 0; n < terms; ++n) {
    Cplx half(n + 0.5, 0.0);
    Cplx w = std::exp(kPi * kI * tau * half * half);
    if (n % 2) w = -w;
    num += w * std::sin(2.0 * kPi * half * z);
    den += w * 2.0 * kPi * half;
  }
  return num / den;  // the common factor 2 in numerator and normalizer cancels
}

}  // namespace

TEST_CASE("theta matches the lattice sum route") {
  for (Cplx tau : {Cplx(0.3, 1.1), Cplx(-0.4, 0.9), Cplx(0.0, 2.0)}) {
    ThetaEngine eng(tau);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    for (int t = 0; t < 25; ++t) {
      Cplx z = unif(rng) + unif(rng) * tau;
      CHECK(rel(eng.theta(z), theta_sum_normalized(tau, z)) < 1e-11);
    }
  }
}

TEST_CASE("theta transformation laws") {
  for (Cplx tau : {Cplx(0.3, 1.1), Cplx(-0.4, 0.9)}) {
    ThetaEngine eng(tau);
    ThetaEngine eng_next(tau + 1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.08, 0.92);
    for (int t = 0; t < 50; ++t) {
      Cplx z = unif(rng) + unif(rng) * tau;
      Cplx th = eng.theta(z);
      CHECK(rel(eng.theta(-z), -th) < 1e-10);
      CHECK(rel(eng.theta(z + 1.0), -th) < 1e-10);
      Cplx fac = -std::exp(-kPi * kI * tau - 2.0 * kPi * kI * z);
      CHECK(rel(eng.theta(z + tau), fac * th) < 1e-10);
      CHECK(rel(eng_next.theta(z), th) < 1e-10);
    }
  }
}

TEST_CASE("heat flow residual") {
  CHECK(heat_equation_residual(Cplx(0.3, 1.1), Cplx(0.23, 0.11)) < 1e-6);
  CHECK(heat_equation_residual(Cplx(-0.4, 0.9), Cplx(0.31, 0.17)) < 1e-6);
}

TEST_CASE("unit normalization and eta value") {
  ThetaEngine eng(Cplx(0.0, 1.0));
  XSeries u = eng.theta_unit_series(4);
  CHECK(std::abs(u[0] - 1.0) < 1e-12);
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  CHECK(std::abs(eng.eta() - Cplx(0.7682254223260567, 0.0)) < 1e-12);
}

TEST_CASE("lattice point guard") {
  ThetaEngine eng(Cplx(0.3, 1.1));
  CHECK_THROWS_AS(eng.theta(Cplx(0.0, 0.0)), LatticePointError);
  CHECK_THROWS_AS(eng.theta(Cplx(1.3, 1.1)), LatticePointError);  // z = 1 + tau
  CHECK_THROWS_AS(k_series(eng, Cplx(0.0, 0.0), 4), LatticePointError);
  CHECK(eng.lattice_distance(Cplx(0.0, 0.0)) < 1e-12);
  CHECK(eng.lattice_distance(Cplx(0.3, 1.1)) < 1e-12);
  CHECK(eng.lattice_distance(Cplx(0.5, 0.55)) > 0.2);
  CHECK_THROWS_AS(ThetaEngine(Cplx(0.3, -1.1)), std::invalid_argument);
}

TEST_CASE("series helpers invert and differentiate") {
  XSeries a = {Cplx(2.0, 0.5), Cplx(-1.0, 0.3), Cplx(0.7, 0.0), Cplx(0.0, -2.1)};
  XSeries inv = xs_inv(a, 4);
  XSeries one = xs_mul(a, inv, 4);
  CHECK(std::abs(one[0] - 1.0) < 1e-14);
  for (std::size_t j = 1; j < one.size(); ++j) CHECK(std::abs(one[j]) < 1e-13);

  XSeries b = {Cplx(1.0), Cplx(0.0, 1.0), Cplx(0.25)};
  XSeries prod = xs_mul(a, b, 5);
  XSeries lhs = xs_derivative(prod);
  XSeries rhs(lhs.size(), Cplx(0.0));
  XSeries da = xs_derivative(a), db = xs_derivative(b);
  XSeries t1 = xs_mul(da, b, lhs.size() - 1), t2 = xs_mul(a, db, lhs.size() - 1);
  for (std::size_t j = 0; j + 1 < lhs.size(); ++j)
    CHECK(std::abs(lhs[j] - t1[j] - t2[j]) < 1e-13);

  Cplx x(0.3, -0.2);
  Cplx direct = a[0] + a[1] * x + a[2] * x * x + a[3] * x * x * x;
  CHECK(std::abs(xs_eval(a, x) - direct) < 1e-14);
}

TEST_CASE("kernel constant term is the log derivative") {
  for (Cplx tau : {Cplx(0.3, 1.1), Cplx(-0.4, 0.9)}) {
    ThetaEngine eng(tau);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.1, 0.9);
    for (int t = 0; t < 20; ++t) {
      Cplx z = unif(rng) + unif(rng) * tau;
      XSeries k = k_series(eng, z, 2);
      CHECK(rel(k[0], eng.theta_logderiv(z)) < 1e-10);
    }
  }
}

TEST_CASE("kernel odd symmetry coefficient-wise") {
  ThetaEngine eng(Cplx(0.3, 1.1));
  for (Cplx z : {Cplx(0.31, 0.17), Cplx(0.11, 0.43), Cplx(-0.22, 0.35)}) {
    XSeries kp = k_series(eng, z, 8);
    XSeries km = k_series(eng, -z, 8);
    XSeries gp = g_series(eng, z, 8);
    XSeries gm = g_series(eng, -z, 8);
    double scale = 0.0;
    for (const Cplx& c : kp) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j < kp.size(); ++j) {
      double sk = (j % 2 == 0) ? 1.0 : -1.0;
      // k(z,x) = -k(-z,-x): even orders flip, odd orders persist
      CHECK(std::abs(km[j] + sk * kp[j]) / scale < 1e-10);
      CHECK(std::abs(gm[j] - sk * gp[j]) / scale < 1e-10);
    }
  }
}

TEST_CASE("g is the term-wise derivative of k") {
  ThetaEngine eng(Cplx(-0.4, 0.9));
  Cplx z(0.27, 0.31);
  XSeries k = k_series(eng, z, 9);
  XSeries g = g_series(eng, z, 8);
  for (std::size_t j = 0; j + 1 <= 8; ++j)
    CHECK(std::abs(g[j] - double(j + 1) * k[j + 1]) < 1e-12);
}

TEST_CASE("trigonometric limit of the kernel") {
  ThetaEngine eng(Cplx(0.0, 20.0));
  for (Cplx z : {Cplx(0.31, 0.17), Cplx(0.05, -0.12), Cplx(0.71, 0.02)}) {
    XSeries k = k_series(eng, z, 8);
    XSeries kt = k_trig_coeffs(z, 8);
    for (std::size_t j = 0; j <= 8; ++j) CHECK(std::abs(k[j] - kt[j]) < 1e-7);
  }
}

TEST_CASE("bernoulli numbers") {
  std::vector<Rat> b = bernoulli(12);
  CHECK(b[0] == Rat(1));
  CHECK(b[1] == Rat(-1, 2));
  CHECK(b[2] == Rat(1, 6));
  CHECK(b[4] == Rat(-1, 30));
  CHECK(b[6] == Rat(1, 42));
  CHECK(b[8] == Rat(-1, 30));
  CHECK(b[10] == Rat(5, 66));
  CHECK(b[12] == Rat(-691, 2730));
  for (int j = 3; j <= 11; j += 2) CHECK(b[static_cast<std::size_t>(j)] == Rat(0));
}

TEST_CASE("trig expansion coefficients are -2 zeta(2n+2)") {
  std::vector<PiPower> c = trig_c_coeffs(4);
  REQUIRE(c.size() == 4);
  CHECK(c[0].coeff == Rat(-1, 3));
  CHECK(c[0].pi_exp == 2);
  CHECK(c[1].coeff == Rat(-1, 45));
  CHECK(c[1].pi_exp == 4);
  CHECK(c[2].coeff == Rat(-2, 945));
  CHECK(c[2].pi_exp == 6);
  CHECK(c[3].coeff == Rat(-1, 4725));
  CHECK(c[3].pi_exp == 8);
  // numeric cross-check against zeta partial sums with an integral tail bound
  for (int n = 0; n < 4; ++n) {
    double s = 2.0 * n + 2.0;
    double zeta = 0;
    for (int m = 1; m < 4000; ++m) zeta += std::pow(m, -s);
    zeta += std::pow(4000.0, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(4000.0, -s);
    CHECK(std::abs(c[static_cast<std::size_t>(n)].value() + 2.0 * zeta) < 1e-9);
  }
}

TEST_CASE("weight table for the even expansion") {
  std::vector<PiPower> a = weight_a_coeffs(3);
  REQUIRE(a.size() == 3);
  CHECK(a[0].coeff == Rat(1, 15));
  CHECK(a[0].pi_exp == 4);  // a_2 = pi^4/15
  CHECK(a[1].coeff == Rat(2, 189));
  CHECK(a[1].pi_exp == 6);
  CHECK(a[2].coeff == Rat(1, 675));
  CHECK(a[2].pi_exp == 8);
}

TEST_CASE("phi series is even with zero constant term") {
  ThetaEngine eng(Cplx(0.3, 1.1));
  XSeries phi = phi_series(eng, 9);
  CHECK(std::abs(phi[0]) < 1e-12);
  for (std::size_t j = 1; j < phi.size(); j += 2) CHECK(std::abs(phi[j]) < 1e-12);
  // trig limit: coefficient of x^2 tends to the bare weight a_2
  ThetaEngine far(Cplx(0.0, 20.0));
  XSeries phi_far = phi_series(far, 4);
  CHECK(std::abs(phi_far[2] - std::pow(kPi, 4) / 15.0) < 1e-10);
}

TEST_CASE("normalized modular coefficients") {
  // weight normalization sends every index to 1 in the large Im tau limit
  ThetaEngine far(Cplx(0.0, 20.0));
  for (int n : {1, 2, 3}) CHECK(std::abs(eisenstein(far, n) - 1.0) < 1e-12);

  // classical interior zeros and values
  ThetaEngine at_i(Cplx(0.0, 1.0));
  CHECK(std::abs(eisenstein(at_i, 2)) < 1e-12);  // weight 6 vanishes at i
  CHECK(std::abs(eisenstein(at_i, 1) - 1.4557628922687107) < 1e-11);
  ThetaEngine at_rho(Cplx(-0.5, std::sqrt(3.0) / 2.0));
  CHECK(std::abs(eisenstein(at_rho, 1)) < 1e-12);  // weight 4 vanishes at rho
  CHECK(std::abs(eisenstein(at_rho, 3)) < 1e-12);  // weight 8 = square of weight 4

  // the one-dimensional weight-8 space forces E_8 = E_4^2 everywhere
  for (Cplx tau : {Cplx(0.3, 1.1), Cplx(-0.17, 0.83), Cplx(0.0, 1.0)}) {
    ThetaEngine eng(tau);
    Cplx e4 = eisenstein(eng, 1);
    Cplx e8 = eisenstein(eng, 3);
    CHECK(std::abs(e8 - e4 * e4) < 1e-10);
  }

  // invariance under tau -> tau + 1
  ThetaEngine eng(Cplx(0.2, 1.3));
  ThetaEngine eng_next(Cplx(1.2, 1.3));
  for (int n : {1, 2, 3})
    CHECK(std::abs(eisenstein(eng, n) - eisenstein(eng_next, n)) < 1e-9);

  CHECK_THROWS_AS(eisenstein(eng, 0), std::invalid_argument);
}
