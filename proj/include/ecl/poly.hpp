#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecl/rational.hpp"

namespace ecl {

// Sparse multivariate polynomials over Rat. The exponent vector has one slot
// per variable; maps never store zero coefficients.
using Expo = std::vector<int16_t>;
using Poly = std::map<Expo, Rat>;

// Variable layout for k coordinates x_0..x_{k-1} followed by a k-by-n block
// of letters m_{a,i}. Rows are indexed by a, columns by i.
struct VarLayout {
  int k = 0;
  int n = 0;

  int nvars() const { return k + k * n; }
  int xvar(int a) const { return a; }
  int mvar(int a, int i) const { return k + a * n + i; }

  bool operator==(const VarLayout& o) const { return k == o.k && n == o.n; }
};

std::string var_name(const VarLayout& lay, int v);

Poly poly_const(const VarLayout& lay, const Rat& c);
Poly poly_var(const VarLayout& lay, int v);
Poly poly_mono(const Expo& e, const Rat& c);

bool poly_is_zero(const Poly& p);
void poly_add_scaled(Poly& dst, const Poly& src, const Rat& s);
Poly poly_scale(const Poly& p, const Rat& s);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_mono(const Poly& p, const Expo& e, const Rat& c);
Poly poly_derivative(const Poly& p, int v);
int poly_degree_in(const Poly& p, int v);
int poly_total_degree(const Poly& p);

// Substitutes x_va := x_vb everywhere (exponent merge).
Poly poly_subst_var_equal(const Poly& p, int va, int vb);

// Substitutes every variable v by the linear form sum_w rows[v][w] * x_w.
// Used for reflection actions; rows must be nvars x nvars.
Poly poly_subst_linear(const VarLayout& lay, const Poly& p,
                       const std::vector<std::vector<Rat>>& rows);

// Exact division by (x_va - x_vb); nullopt if the remainder is nonzero.
std::optional<Poly> poly_divexact_diff(const Poly& p, int va, int vb);

// Exact division by a linear form sum_v coeffs[v] * x_v; nullopt if inexact.
std::optional<Poly> poly_divexact_linear(const Poly& p,
                                         const std::vector<Rat>& coeffs);

std::string poly_str(const VarLayout& lay, const Poly& p);

// Element of C[x, m][1/(x_a - x_b)]: a numerator polynomial over a monomial
// in the pairwise differences x_a - x_b, a < b. Canonical form: numerator not
// divisible by any difference with positive exponent; the zero element has an
// empty numerator and an all-zero exponent vector.
struct PolyState {
  VarLayout lay;
  Poly num;
  std::vector<int> den;  // one exponent per pair (a,b), a < b
};

int pair_count(int k);
int pair_index(int k, int a, int b);  // requires a < b
std::pair<int, int> pair_unindex(int k, int idx);

PolyState ps_zero(const VarLayout& lay);
PolyState ps_from_poly(const VarLayout& lay, Poly p);
bool ps_is_zero(const PolyState& s);
void ps_reduce(PolyState& s);
void ps_add_scaled(PolyState& dst, const PolyState& src, const Rat& c);
PolyState ps_mul_poly(const PolyState& s, const Poly& p);
PolyState ps_mul_inv(const PolyState& s, int a, int b);  // multiply by 1/(x_a - x_b), a < b
PolyState ps_dx(const PolyState& s, int a);
PolyState ps_dm(const PolyState& s, int a, int i);
bool ps_equal(const PolyState& s, const PolyState& t);
std::string ps_str(const PolyState& s);

}
