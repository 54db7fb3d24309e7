#include "ecl/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ecl {

std::string var_name(const VarLayout& lay, int v) {
  if (v < lay.k) return "x" + std::to_string(v);
  int off = v - lay.k;
  return "m" + std::to_string(off / lay.n) + "_" + std::to_string(off % lay.n);
}

Poly poly_const(const VarLayout& lay, const Rat& c) {
  Poly p;
  if (c != 0) p.emplace(Expo(lay.nvars(), 0), c);
  return p;
}

Poly poly_var(const VarLayout& lay, int v) {
  Expo e(lay.nvars(), 0);
  e[v] = 1;
  Poly p;
  p.emplace(std::move(e), Rat(1));
  return p;
}

Poly poly_mono(const Expo& e, const Rat& c) {
  Poly p;
  if (c != 0) p.emplace(e, c);
  return p;
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

void poly_add_scaled(Poly& dst, const Poly& src, const Rat& s) {
  if (s == 0) return;
  for (const auto& [e, c] : src) {
    auto it = dst.find(e);
    if (it == dst.end()) {
      dst.emplace(e, c * s);
    } else {
      it->second += c * s;
      if (it->second == 0) dst.erase(it);
    }
  }
}

Poly poly_scale(const Poly& p, const Rat& s) {
  Poly r;
  if (s == 0) return r;
  for (const auto& [e, c] : p) r.emplace(e, c * s);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  if (a.empty() || b.empty()) return r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Expo e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto it = r.find(e);
      if (it == r.end()) {
        r.emplace(std::move(e), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.erase(it);
      }
    }
  }
  return r;
}

Poly poly_mul_mono(const Poly& p, const Expo& e, const Rat& c) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [ep, cp] : p) {
    Expo en = ep;
    for (size_t i = 0; i < en.size(); ++i) en[i] += e[i];
    r.emplace(std::move(en), cp * c);
  }
  return r;
}

Poly poly_derivative(const Poly& p, int v) {
  Poly r;
  for (const auto& [e, c] : p) {
    if (e[v] == 0) continue;
    Expo en = e;
    en[v] -= 1;
    r.emplace(std::move(en), c * e[v]);
  }
  return r;
}

int poly_degree_in(const Poly& p, int v) {
  int d = 0;
  for (const auto& [e, c] : p)
    if (e[v] > d) d = e[v];
  return d;
}

int poly_total_degree(const Poly& p) {
  int d = 0;
  for (const auto& [e, c] : p) {
    int t = 0;
    for (auto x : e) t += x;
    if (t > d) d = t;
  }
  return d;
}

Poly poly_subst_var_equal(const Poly& p, int va, int vb) {
  Poly r;
  for (const auto& [e, c] : p) {
    Expo en = e;
    en[vb] += en[va];
    en[va] = 0;
    auto it = r.find(en);
    if (it == r.end()) {
      r.emplace(std::move(en), c);
    } else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

Poly poly_subst_linear(const VarLayout& lay, const Poly& p,
                       const std::vector<std::vector<Rat>>& rows) {
  const int nv = lay.nvars();
  Poly out;
  for (const auto& [e, c] : p) {
    Poly term = poly_const(lay, c);
    for (int v = 0; v < nv; ++v) {
      if (e[v] == 0) continue;
      Poly lin;
      for (int w = 0; w < nv; ++w) {
        if (rows[v][w] == 0) continue;
        Expo ew(nv, 0);
        ew[w] = 1;
        lin.emplace(std::move(ew), rows[v][w]);
      }
      for (int rep = 0; rep < e[v]; ++rep) term = poly_mul(term, lin);
    }
    poly_add_scaled(out, term, Rat(1));
  }
  return out;
}

std::optional<Poly> poly_divexact_diff(const Poly& p, int va, int vb) {
  if (p.empty()) return Poly{};
  // view p as a polynomial in x_va with coefficients in the other variables
  std::map<int, Poly> coeff;
  for (const auto& [e, c] : p) {
    Expo er = e;
    int d = er[va];
    er[va] = 0;
    coeff[d].emplace(std::move(er), c);
  }
  int top = coeff.rbegin()->first;
  if (top == 0) return std::nullopt;  // no x_va at all, cannot be divisible
  // descending synthetic division by (x_va - x_vb): q_{e-1} = c_e + x_vb q_e
  std::map<int, Poly> q;
  Poly carry;  // q_e during descent
  for (int e = top; e >= 1; --e) {
    Poly qe;
    auto it = coeff.find(e);
    if (it != coeff.end()) qe = it->second;
    if (!carry.empty()) {
      Expo shift(p.begin()->first.size(), 0);
      shift[vb] = 1;
      poly_add_scaled(qe, poly_mul_mono(carry, shift, Rat(1)), Rat(1));
    }
    if (!qe.empty()) q[e - 1] = qe;
    carry = std::move(qe);
  }
  Poly rem;
  auto it0 = coeff.find(0);
  if (it0 != coeff.end()) rem = it0->second;
  if (!carry.empty()) {
    Expo shift(p.begin()->first.size(), 0);
    shift[vb] = 1;
    poly_add_scaled(rem, poly_mul_mono(carry, shift, Rat(1)), Rat(1));
  }
  if (!rem.empty()) return std::nullopt;
  Poly out;
  for (const auto& [d, qp] : q) {
    for (const auto& [e, c] : qp) {
      Expo en = e;
      en[va] += d;
      out.emplace(std::move(en), c);
    }
  }
  return out;
}

std::optional<Poly> poly_divexact_linear(const Poly& p,
                                         const std::vector<Rat>& coeffs) {
  if (p.empty()) return Poly{};
  int pivot = -1;
  for (size_t v = 0; v < coeffs.size(); ++v)
    if (coeffs[v] != 0) {
      pivot = static_cast<int>(v);
      break;
    }
  if (pivot < 0) throw std::invalid_argument("divexact_linear: zero divisor");
  const Rat cv = coeffs[pivot];
  const size_t nv = coeffs.size();

  std::map<int, Poly> coeff;
  for (const auto& [e, c] : p) {
    Expo er = e;
    int d = er[pivot];
    er[pivot] = 0;
    coeff[d].emplace(std::move(er), c);
  }
  // rest = divisor minus the pivot term
  Poly rest;
  for (size_t w = 0; w < nv; ++w) {
    if (static_cast<int>(w) == pivot || coeffs[w] == 0) continue;
    Expo ew(nv, 0);
    ew[w] = 1;
    rest.emplace(std::move(ew), coeffs[w]);
  }
  int top = coeff.rbegin()->first;
  if (top == 0) {
    // p has no pivot variable: divisible only if p == 0, handled above
    return std::nullopt;
  }
  std::map<int, Poly> q;
  Poly carry;
  for (int e = top; e >= 1; --e) {
    Poly qe;
    auto it = coeff.find(e);
    if (it != coeff.end()) qe = it->second;
    if (!carry.empty()) poly_add_scaled(qe, poly_mul(rest, carry), Rat(-1));
    qe = poly_scale(qe, Rat(1) / cv);
    if (!qe.empty()) q[e - 1] = qe;
    carry = std::move(qe);
  }
  Poly rem;
  auto it0 = coeff.find(0);
  if (it0 != coeff.end()) rem = it0->second;
  if (!carry.empty()) poly_add_scaled(rem, poly_mul(rest, carry), Rat(-1));
  if (!rem.empty()) return std::nullopt;
  Poly out;
  for (const auto& [d, qp] : q) {
    for (const auto& [e, c] : qp) {
      Expo en = e;
      en[pivot] += d;
      out.emplace(std::move(en), c);
    }
  }
  return out;
}

std::string poly_str(const VarLayout& lay, const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int v = 0; v < lay.nvars(); ++v) {
      if (e[v] == 0) continue;
      os << "*" << var_name(lay, v);
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

int pair_count(int k) { return k * (k - 1) / 2; }

int pair_index(int k, int a, int b) {
  // pairs in order (0,1),(0,2),..,(0,k-1),(1,2),..
  return a * k - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<int, int> pair_unindex(int k, int idx) {
  for (int a = 0; a < k; ++a) {
    int row = k - a - 1;
    if (idx < row) return {a, a + 1 + idx};
    idx -= row;
  }
  throw std::out_of_range("pair_unindex");
}

namespace {

Poly diff_poly(const VarLayout& lay, int a, int b) {
  // x_a - x_b with a < b
  Poly p = poly_var(lay, lay.xvar(a));
  poly_add_scaled(p, poly_var(lay, lay.xvar(b)), Rat(-1));
  return p;
}

void make_zero(PolyState& s) {
  s.num.clear();
  s.den.assign(pair_count(s.lay.k), 0);
}

}  // namespace

PolyState ps_zero(const VarLayout& lay) {
  PolyState s;
  s.lay = lay;
  s.den.assign(pair_count(lay.k), 0);
  return s;
}

PolyState ps_from_poly(const VarLayout& lay, Poly p) {
  PolyState s = ps_zero(lay);
  s.num = std::move(p);
  return s;
}

bool ps_is_zero(const PolyState& s) { return s.num.empty(); }

void ps_reduce(PolyState& s) {
  if (s.num.empty()) {
    make_zero(s);
    return;
  }
  for (size_t idx = 0; idx < s.den.size(); ++idx) {
    while (s.den[idx] > 0) {
      auto [a, b] = pair_unindex(s.lay.k, static_cast<int>(idx));
      auto q = poly_divexact_diff(s.num, s.lay.xvar(a), s.lay.xvar(b));
      if (!q) break;
      s.num = std::move(*q);
      s.den[idx] -= 1;
      if (s.num.empty()) {
        make_zero(s);
        return;
      }
    }
  }
}

void ps_add_scaled(PolyState& dst, const PolyState& src, const Rat& c) {
  if (c == 0 || src.num.empty()) return;
  if (dst.num.empty()) {
    dst.num = poly_scale(src.num, c);
    dst.den = src.den;
    return;
  }
  const int np = pair_count(dst.lay.k);
  Poly a = dst.num;
  Poly b = poly_scale(src.num, c);
  for (int idx = 0; idx < np; ++idx) {
    int e = std::max(dst.den[idx], src.den[idx]);
    auto [u, v] = pair_unindex(dst.lay.k, idx);
    Poly d = diff_poly(dst.lay, u, v);
    for (int r = dst.den[idx]; r < e; ++r) a = poly_mul(a, d);
    for (int r = src.den[idx]; r < e; ++r) b = poly_mul(b, d);
    dst.den[idx] = e;
  }
  poly_add_scaled(a, b, Rat(1));
  dst.num = std::move(a);
  ps_reduce(dst);
}

PolyState ps_mul_poly(const PolyState& s, const Poly& p) {
  if (s.num.empty() || p.empty()) return ps_zero(s.lay);
  PolyState r;
  r.lay = s.lay;
  r.num = poly_mul(s.num, p);
  r.den = s.den;
  ps_reduce(r);
  return r;
}

PolyState ps_mul_inv(const PolyState& s, int a, int b) {
  if (s.num.empty()) return ps_zero(s.lay);
  PolyState r = s;
  r.den[pair_index(s.lay.k, a, b)] += 1;
  ps_reduce(r);
  return r;
}

PolyState ps_dx(const PolyState& s, int a) {
  if (s.num.empty()) return ps_zero(s.lay);
  const int k = s.lay.k;
  std::vector<int> act;  // active pair indices involving coordinate a
  std::vector<int> sgn;  // d(x_u - x_v)/dx_a on those pairs
  for (size_t idx = 0; idx < s.den.size(); ++idx) {
    if (s.den[idx] == 0) continue;
    auto [u, v] = pair_unindex(k, static_cast<int>(idx));
    if (u == a)
      act.push_back(static_cast<int>(idx)), sgn.push_back(1);
    else if (v == a)
      act.push_back(static_cast<int>(idx)), sgn.push_back(-1);
  }
  Poly t = poly_derivative(s.num, s.lay.xvar(a));
  for (size_t j = 0; j < act.size(); ++j) {
    auto [u, v] = pair_unindex(k, act[j]);
    t = poly_mul(t, diff_poly(s.lay, u, v));
  }
  // quotient rule: each active factor contributes -e * sgn * N * (others)
  for (size_t j = 0; j < act.size(); ++j) {
    Poly w = s.num;
    for (size_t l = 0; l < act.size(); ++l) {
      if (l == j) continue;
      auto [u, v] = pair_unindex(k, act[l]);
      w = poly_mul(w, diff_poly(s.lay, u, v));
    }
    poly_add_scaled(t, w, Rat(-s.den[act[j]] * sgn[j]));
  }
  PolyState r;
  r.lay = s.lay;
  r.num = std::move(t);
  r.den = s.den;
  for (int idx : act) r.den[idx] += 1;
  if (r.num.empty()) return ps_zero(s.lay);
  ps_reduce(r);
  return r;
}

PolyState ps_dm(const PolyState& s, int a, int i) {
  if (s.num.empty()) return ps_zero(s.lay);
  PolyState r;
  r.lay = s.lay;
  r.num = poly_derivative(s.num, s.lay.mvar(a, i));
  r.den = s.den;
  if (r.num.empty()) return ps_zero(s.lay);
  ps_reduce(r);
  return r;
}

bool ps_equal(const PolyState& s, const PolyState& t) {
  // states are kept reduced, so the representation is unique
  return s.lay == t.lay && s.den == t.den && s.num == t.num;
}

std::string ps_str(const PolyState& s) {
  std::ostringstream os;
  os << "(" << poly_str(s.lay, s.num) << ")";
  for (size_t idx = 0; idx < s.den.size(); ++idx) {
    if (s.den[idx] == 0) continue;
    auto [u, v] = pair_unindex(s.lay.k, static_cast<int>(idx));
    os << " / (x" << u << "-x" << v << ")";
    if (s.den[idx] > 1) os << "^" << s.den[idx];
  }
  return os.str();
}

}
