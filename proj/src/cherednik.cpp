#include "ecl/cherednik.hpp"

#include <stdexcept>

namespace ecl {

namespace {

std::vector<Rat> simple_inner_column(const RootSystem& rs, const RootCoords& v) {
  std::vector<Rat> col(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    col[i] = rs.inner(v, rs.roots[rs.simple_indices[i]].v);
  return col;
}

}  // namespace

DunklRing::DunklRing(int n_letters) : n(n_letters) {
  if (n < 2) throw std::invalid_argument("DunklRing: need n >= 2");
  rs = build_root_system(RootType::A, n - 1);
  lay = VarLayout{n - 1, 0};
  const int r = rs.rank;

  coroot_gram.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    coroot_gram[i] = simple_inner_column(rs, rs.roots[rs.simple_indices[i]].v);

  dual_coords.resize(r);
  for (int j = 0; j < r; ++j) {
    std::vector<Rat> e(r, Rat(0));
    e[j] = Rat(1);
    dual_coords[j] = matq_solve(coroot_gram, e);
  }

  const std::size_t np = rs.num_positive();
  root_form.resize(np);
  refl_rows.resize(np);
  for (std::size_t g = 0; g < np; ++g) {
    const RootCoords& gamma = rs.positive_root(g).v;
    root_form[g] = simple_inner_column(rs, gamma);
    // coroot coordinates of gamma^vee
    Rat len = rs.length_sq(gamma);
    std::vector<Rat> rhs = root_form[g];
    for (auto& e : rhs) e = e * 2 / len;
    std::vector<Rat> gv = matq_solve(coroot_gram, rhs);
    // zeta_v -> zeta_v - gv_v * (gamma, z)
    auto& rows = refl_rows[g];
    rows.assign(r, std::vector<Rat>(r, Rat(0)));
    for (int v = 0; v < r; ++v) {
      rows[v][v] += Rat(1);
      for (int w = 0; w < r; ++w) rows[v][w] -= gv[v] * root_form[g][w];
    }
  }
}

Poly DunklRing::coord_form(const std::vector<Rat>& u) const {
  const int r = rs.rank;
  Poly p;
  for (int j = 0; j < r; ++j) {
    Rat c(0);
    for (int m = 0; m < r; ++m) c += coroot_gram[j][m] * u[m];
    if (c != 0) poly_add_scaled(p, poly_var(lay, j), c);
  }
  return p;
}

Poly DunklRing::reflect_poly(std::size_t pos_idx, const Poly& p) const {
  return poly_subst_linear(lay, p, refl_rows[pos_idx]);
}

Poly DunklRing::dunkl_apply(const std::vector<Rat>& u, const Rat& hbar, const Rat& c,
                            const Poly& p) const {
  const int r = rs.rank;
  Poly out;
  for (int m = 0; m < r; ++m)
    if (u[m] != 0) poly_add_scaled(out, poly_derivative(p, m), hbar * u[m]);
  for (std::size_t g = 0; g < root_form.size(); ++g) {
    Rat gu(0);
    for (int m = 0; m < r; ++m) gu += root_form[g][m] * u[m];
    if (gu == 0) continue;
    Poly diff = p;
    poly_add_scaled(diff, reflect_poly(g, p), Rat(-1));
    if (poly_is_zero(diff)) continue;
    auto q = poly_divexact_linear(diff, root_form[g]);
    if (!q) throw std::logic_error("dunkl_apply: reflection difference not divisible");
    poly_add_scaled(out, *q, -c * gu);
  }
  return out;
}

Rat DunklRing::pairing(const Rat& hbar, const Rat& c, const Poly& f,
                       const Poly& g) const {
  const int r = rs.rank;
  Rat total(0);
  Expo zero(static_cast<std::size_t>(r), 0);
  for (const auto& [e, coeff] : f) {
    Poly cur = g;
    for (int j = 0; j < r && !poly_is_zero(cur); ++j)
      for (int rep = 0; rep < e[j]; ++rep)
        cur = dunkl_apply(dual_coords[j], hbar, c, cur);
    auto it = cur.find(zero);
    if (it != cur.end()) total += coeff * it->second;
  }
  return total;
}

namespace {

void enum_deg(int nv, int deg, Expo& cur, int pos, std::vector<Expo>& out) {
  if (pos == nv - 1) {
    cur[pos] = static_cast<int16_t>(deg);
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = 0; e <= deg; ++e) {
    cur[pos] = static_cast<int16_t>(e);
    enum_deg(nv, deg - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<Expo> monomials_of_degree(int nv, int deg) {
  std::vector<Expo> out;
  Expo cur(nv, 0);
  enum_deg(nv, deg, cur, 0, out);
  return out;
}

// Solve M a = rhs where M has full column rank and the system is consistent.
std::vector<Rat> solve_consistent(const MatQ& m, const std::vector<Rat>& rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  MatQ aug(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = rhs[i];
  }
  auto pivots = matq_rref(aug);
  std::vector<Rat> a(cols, Rat(0));
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == cols)
      throw std::logic_error("solve_consistent: inconsistent system");
    a[pivots[p]] = aug[p][cols];
  }
  return a;
}

struct DegreeData {
  std::vector<Expo> monos;
  MatQ gram;
  std::vector<std::size_t> pivots;  // chosen basis monomial positions
  int base = 0;                     // first global basis index of this degree
};

}  // namespace

DunklModule build_dunkl_module(int n, const Rat& hbar, const Rat& c, int max_degree) {
  DunklRing ring(n);
  const int r = ring.rs.rank;

  std::vector<DegreeData> degs;
  int total_dim = 0;
  for (int d = 0; d <= max_degree + 1; ++d) {
    DegreeData dd;
    dd.monos = monomials_of_degree(r, d);
    const std::size_t nd = dd.monos.size();
    dd.gram.assign(nd, std::vector<Rat>(nd));
    std::vector<Poly> polys(nd);
    for (std::size_t i = 0; i < nd; ++i) polys[i] = poly_mono(dd.monos[i], Rat(1));
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j)
        dd.gram[i][j] = ring.pairing(hbar, c, polys[i], polys[j]);
    MatQ copy = dd.gram;
    dd.pivots = matq_rref(copy);
    dd.base = total_dim;
    total_dim += static_cast<int>(dd.pivots.size());
    bool degenerate_to_zero = dd.pivots.empty();
    degs.push_back(std::move(dd));
    if (degenerate_to_zero) break;
  }
  if (!degs.back().pivots.empty())
    throw std::logic_error(
        "build_dunkl_module: pairing nondegenerate through requested degree");

  DunklModule mod;
  mod.n = n;
  mod.hbar = hbar;
  mod.c = c;
  mod.rs = ring.rs;
  mod.dim = total_dim;
  for (const auto& dd : degs)
    if (!dd.pivots.empty()) mod.hilbert.push_back(static_cast<int>(dd.pivots.size()));
  for (std::size_t d = 0; d < degs.size(); ++d)
    for (std::size_t l = 0; l < degs[d].pivots.size(); ++l)
      mod.grade.push_back(static_cast<int>(d));

  // expresses a polynomial of pure degree d as quotient coordinates
  auto express = [&degs, total_dim](const Poly& p, int d) {
    std::vector<Rat> out(total_dim, Rat(0));
    if (poly_is_zero(p)) return out;
    if (d < 0 || d >= static_cast<int>(degs.size())) return out;
    const DegreeData& dd = degs[d];
    if (dd.pivots.empty()) return out;
    const std::size_t nd = dd.monos.size();
    std::vector<Rat> v(nd, Rat(0));
    for (std::size_t i = 0; i < nd; ++i) {
      auto it = p.find(dd.monos[i]);
      if (it != p.end()) v[i] = it->second;
    }
    std::vector<Rat> rhs(nd, Rat(0));
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j)
        if (v[j] != 0) rhs[i] += dd.gram[i][j] * v[j];
    MatQ cols(nd, std::vector<Rat>(dd.pivots.size()));
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t pcol = 0; pcol < dd.pivots.size(); ++pcol)
        cols[i][pcol] = dd.gram[i][dd.pivots[pcol]];
    auto a = solve_consistent(cols, rhs);
    for (std::size_t pcol = 0; pcol < dd.pivots.size(); ++pcol)
      out[dd.base + pcol] = a[pcol];
    return out;
  };

  auto fill = [&](std::vector<MatQ>& dst, std::size_t count, auto&& image_of) {
    dst.assign(count, matq_zero(total_dim, total_dim));
    for (std::size_t op = 0; op < count; ++op) {
      for (std::size_t d = 0; d < degs.size(); ++d) {
        const DegreeData& dd = degs[d];
        for (std::size_t l = 0; l < dd.pivots.size(); ++l) {
          Poly basis = poly_mono(dd.monos[dd.pivots[l]], Rat(1));
          auto [img, d_out] = image_of(op, basis, static_cast<int>(d));
          auto coords = express(img, d_out);
          int col = dd.base + static_cast<int>(l);
          for (int row = 0; row < total_dim; ++row)
            if (coords[row] != 0) dst[op][row][col] = coords[row];
        }
      }
    }
  };

  fill(mod.mult, static_cast<std::size_t>(r), [&](std::size_t j, const Poly& b, int d) {
    std::vector<Rat> e(r, Rat(0));
    e[j] = Rat(1);
    return std::make_pair(poly_mul(ring.coord_form(e), b), d + 1);
  });
  fill(mod.dunkl, static_cast<std::size_t>(r), [&](std::size_t j, const Poly& b, int d) {
    std::vector<Rat> e(r, Rat(0));
    e[j] = Rat(1);
    return std::make_pair(ring.dunkl_apply(e, hbar, c, b), d - 1);
  });
  fill(mod.refl, ring.rs.num_positive(), [&](std::size_t g, const Poly& b, int d) {
    return std::make_pair(ring.reflect_poly(g, b), d);
  });
  return mod;
}

}  // namespace ecl
