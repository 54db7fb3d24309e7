#include "ecl/connection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ecl {

namespace {

std::vector<Rat> coroot_eps(const RootSystem& rs, const RootCoords& v) {
  std::vector<Rat> out(v.size());
  Rat len = rs.length_sq(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(2) * v[i] / len;
  return out;
}

Rat inner_rr(const RootSystem& rs, const std::vector<Rat>& a,
             const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += rs.gram_diag[i] * a[i] * b[i];
  return s;
}

// Gram matrix of the simple coroots.
MatQ coroot_gram(const RootSystem& rs) {
  const int r = rs.rank;
  std::vector<std::vector<Rat>> cv(r);
  for (int i = 0; i < r; ++i)
    cv[i] = coroot_eps(rs, rs.roots[rs.simple_indices[i]].v);
  MatQ g(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g[i][j] = inner_rr(rs, cv[i], cv[j]);
  return g;
}

// coroot coordinates of gamma^vee over the simple coroots
std::vector<Rat> covee_coords(const RootSystem& rs, const RootCoords& gamma) {
  const int r = rs.rank;
  auto gv = coroot_eps(rs, gamma);
  std::vector<Rat> rhs(r);
  for (int i = 0; i < r; ++i) {
    auto av = coroot_eps(rs, rs.roots[rs.simple_indices[i]].v);
    rhs[i] = inner_rr(rs, gv, av);
  }
  return matq_solve(coroot_gram(rs), rhs);
}

// pairing (gamma, a_j^vee) over the simple directions
std::vector<Rat> root_pairings(const RootSystem& rs, const RootCoords& gamma) {
  const int r = rs.rank;
  std::vector<Rat> out(r);
  for (int j = 0; j < r; ++j) {
    const RootCoords& a = rs.roots[rs.simple_indices[j]].v;
    out[j] = Rat(2) * rs.inner(gamma, a) / rs.length_sq(a);
  }
  return out;
}

MatQ lin_combo(const std::vector<MatQ>& mats, const std::vector<Rat>& c, int dim) {
  MatQ out = matq_zero(dim, dim);
  for (std::size_t j = 0; j < mats.size(); ++j)
    if (c[j] != 0) out = matq_add(out, mats[j], c[j]);
  return out;
}

}  // namespace

MatQ ConnRep::x_of(const std::vector<Rat>& u) const {
  if (!has_x) throw std::logic_error("ConnRep: no x maps");
  return lin_combo(x_simple, u, dim);
}

MatQ ConnRep::y_of(const std::vector<Rat>& u) const {
  if (!has_y) throw std::logic_error("ConnRep: no y maps");
  return lin_combo(y_simple, u, dim);
}

FlatnessReport flatness_relations_check(const ConnRep& rep) {
  FlatnessReport fr;
  fr.model = rep.name;
  const RootSystem& rs = rep.rs;
  const int r = rs.rank;
  auto record = [&fr](const std::string& name, bool applicable, bool pass,
                      const std::string& detail) {
    RelationCheck c;
    c.relation = name;
    c.applicable = applicable;
    c.pass = pass;
    c.detail = detail;
    if (applicable && !pass) fr.all_applicable_pass = false;
    fr.checks.push_back(std::move(c));
  };

  {
    bool pass = true;
    std::string detail;
    auto planes = rank2_planes(rs);
    for (std::size_t pl = 0; pl < planes.size() && pass; ++pl) {
      MatQ sum = matq_zero(rep.dim, rep.dim);
      for (std::size_t idx : planes[pl]) sum = matq_add(sum, rep.t_pos[idx], Rat(1));
      for (std::size_t idx : planes[pl]) {
        if (!matq_is_zero(matq_commutator(rep.t_pos[idx], sum))) {
          pass = false;
          detail = "plane " + std::to_string(pl) + ", member " + std::to_string(idx);
          break;
        }
      }
    }
    record("rank2-centers", true, pass, detail);
  }

  {
    bool pass = true;
    std::string detail;
    if (rep.has_x) {
      for (int i = 0; i < r && pass; ++i)
        for (int j = i + 1; j < r; ++j)
          if (!matq_is_zero(matq_commutator(rep.x_simple[i], rep.x_simple[j]))) {
            pass = false;
            detail = "pair " + std::to_string(i) + "," + std::to_string(j);
            break;
          }
    }
    record("x-commute", rep.has_x, rep.has_x && pass, detail);
  }
  {
    bool pass = true;
    std::string detail;
    if (rep.has_y) {
      for (int i = 0; i < r && pass; ++i)
        for (int j = i + 1; j < r; ++j)
          if (!matq_is_zero(matq_commutator(rep.y_simple[i], rep.y_simple[j]))) {
            pass = false;
            detail = "pair " + std::to_string(i) + "," + std::to_string(j);
            break;
          }
    }
    record("y-commute", rep.has_y, rep.has_y && pass, detail);
  }

  {
    bool applicable = rep.has_x && rep.has_y;
    bool pass = applicable;
    std::string detail;
    if (applicable) {
      // simple coroot coordinate vectors are the unit vectors
      for (int i = 0; i < r && pass; ++i) {
        for (int j = 0; j < r; ++j) {
          std::vector<Rat> ei(r, Rat(0)), ej(r, Rat(0));
          ei[i] = Rat(1);
          ej[j] = Rat(1);
          MatQ lhs = matq_commutator(rep.y_of(ei), rep.x_of(ej));
          MatQ rhs = matq_zero(rep.dim, rep.dim);
          for (std::size_t g = 0; g < rs.num_positive(); ++g) {
            const RootCoords& gamma = rs.positive_root(g).v;
            auto ai = coroot_eps(rs, rs.roots[rs.simple_indices[i]].v);
            auto aj = coroot_eps(rs, rs.roots[rs.simple_indices[j]].v);
            std::vector<Rat> gv(gamma.size());
            for (std::size_t t = 0; t < gamma.size(); ++t) gv[t] = Rat(gamma[t]);
            Rat c = inner_rr(rs, aj, gv) * inner_rr(rs, ai, gv);
            if (c != 0) rhs = matq_add(rhs, rep.t_pos[g], c);
          }
          if (!matq_is_zero(matq_add(lhs, rhs, Rat(-1)))) {
            pass = false;
            detail = "directions " + std::to_string(i) + "," + std::to_string(j);
            break;
          }
        }
      }
    }
    record("mixed-bracket", applicable, pass, detail);
  }

  {
    bool applicable = rep.has_x || rep.has_y;
    bool pass = applicable;
    std::string detail;
    if (applicable) {
      for (std::size_t g = 0; g < rs.num_positive() && pass; ++g) {
        auto pairings = root_pairings(rs, rs.positive_root(g).v);
        MatQ row(1, pairings);
        auto kernel = matq_nullspace(row);
        for (const auto& u : kernel) {
          if (rep.has_x &&
              !matq_is_zero(matq_commutator(rep.t_pos[g], rep.x_of(u)))) {
            pass = false;
            detail = "x against root " + std::to_string(g);
            break;
          }
          if (rep.has_y &&
              !matq_is_zero(matq_commutator(rep.t_pos[g], rep.y_of(u)))) {
            pass = false;
            detail = "y against root " + std::to_string(g);
            break;
          }
        }
      }
    }
    record("orthogonal-decouple", applicable, pass, detail);
  }

  {
    bool applicable = rep.has_weyl;
    bool pass = applicable;
    std::string detail;
    if (applicable) {
      for (int s = 0; s < r && pass; ++s) {
        // reflections used here are involutions, conjugation needs no inverse
        std::size_t spos = 0;
        for (std::size_t g = 0; g < rs.num_positive(); ++g)
          if (rs.positive_indices[g] == rs.simple_indices[s]) spos = g;
        const MatQ& w = rep.weyl_pos[spos];
        const RootCoords& alpha = rs.roots[rs.simple_indices[s]].v;
        for (std::size_t g = 0; g < rs.num_positive(); ++g) {
          RootCoords image = reflect(rs, alpha, rs.positive_root(g).v);
          long long idx = rs.find(image);
          if (idx < 0) throw std::logic_error("weyl check: image not a root");
          if (!rs.roots[idx].positive) {
            RootCoords neg = image;
            for (auto& e : neg) e = -e;
            idx = rs.find(neg);
          }
          std::size_t tpos = 0;
          for (std::size_t p = 0; p < rs.num_positive(); ++p)
            if (rs.positive_indices[p] == idx) tpos = p;
          MatQ conj = matq_mul(matq_mul(w, rep.t_pos[g]), w);
          if (!matq_is_zero(matq_add(conj, rep.t_pos[tpos], Rat(-1)))) {
            pass = false;
            detail = "t conjugation, reflection " + std::to_string(s) + " root " +
                     std::to_string(g);
            break;
          }
        }
      }
    }
    record("weyl-equivariance", applicable, pass, detail);
  }

  return fr;
}

ConnRep build_dunkl_conn_rep(int n, const Rat& hbar, const Rat& c) {
  DunklModule mod = build_dunkl_module(n, hbar, c, 10);
  ConnRep rep;
  rep.name = "cherednik-sl" + std::to_string(n);
  rep.rs = mod.rs;
  rep.dim = mod.dim;
  Rat hv = dual_coxeter(rep.rs);
  for (std::size_t g = 0; g < rep.rs.num_positive(); ++g) {
    MatQ t = matq_scale(mod.refl[g], -c);
    for (int i = 0; i < rep.dim; ++i) t[i][i] += hbar / hv;
    rep.t_pos.push_back(std::move(t));
  }
  rep.has_x = true;
  rep.x_simple = mod.mult;
  rep.has_y = true;
  rep.y_simple = mod.dunkl;
  rep.has_weyl = true;
  rep.weyl_pos = mod.refl;
  return rep;
}

ConnRep build_reflection_conn_rep(int n, const Rat& hbar, const Rat& c) {
  ConnRep rep;
  rep.name = "smallrep-sl" + std::to_string(n);
  rep.rs = build_root_system(RootType::A, n - 1);
  const int r = rep.rs.rank;
  rep.dim = r;
  Rat hv = dual_coxeter(rep.rs);
  for (std::size_t g = 0; g < rep.rs.num_positive(); ++g) {
    const RootCoords& gamma = rep.rs.positive_root(g).v;
    auto gvee = covee_coords(rep.rs, gamma);
    auto pairings = root_pairings(rep.rs, gamma);
    // reflection on the Cartan in coroot coordinates
    MatQ s = matq_identity(r);
    for (int col = 0; col < r; ++col)
      for (int row = 0; row < r; ++row) s[row][col] -= pairings[col] * gvee[row];
    MatQ t = matq_scale(s, -c);
    for (int i = 0; i < r; ++i) t[i][i] += hbar / hv;
    rep.t_pos.push_back(std::move(t));
    rep.weyl_pos.push_back(std::move(s));
  }
  rep.has_weyl = true;
  return rep;
}

ConnRep build_zero_rep(int n, int dim) {
  ConnRep rep;
  rep.name = "zero";
  rep.rs = build_root_system(RootType::A, n - 1);
  rep.dim = dim;
  rep.t_pos.assign(rep.rs.num_positive(), matq_zero(dim, dim));
  rep.has_x = true;
  rep.x_simple.assign(rep.rs.rank, matq_zero(dim, dim));
  rep.has_y = true;
  rep.y_simple.assign(rep.rs.rank, matq_zero(dim, dim));
  return rep;
}

ConnRep build_adjoint_cartan_rep(int n) {
  ConnRep rep;
  rep.name = "adjoint-cartan-sl" + std::to_string(n);
  rep.rs = build_root_system(RootType::A, n - 1);
  const int r = rep.rs.rank;
  rep.dim = r;
  for (std::size_t g = 0; g < rep.rs.num_positive(); ++g) {
    const RootCoords& gamma = rep.rs.positive_root(g).v;
    auto gvee = covee_coords(rep.rs, gamma);
    auto pairings = root_pairings(rep.rs, gamma);
    // u -> 2 gamma(u) gamma^vee
    MatQ kappa = matq_zero(r, r);
    for (int col = 0; col < r; ++col)
      for (int row = 0; row < r; ++row) kappa[row][col] = 2 * pairings[col] * gvee[row];
    rep.t_pos.push_back(std::move(kappa));
  }
  rep.has_x = true;
  rep.x_simple.assign(r, matq_zero(r, r));
  rep.has_y = true;
  rep.y_simple.assign(r, matq_zero(r, r));
  return rep;
}

std::vector<MatQ> casimir_t_from_kappa(const RootSystem& rs,
                                       const std::vector<MatQ>& kappa,
                                       const Rat& lambda, const Rat& z_scalar,
                                       int dim) {
  Rat hv = dual_coxeter(rs);
  std::vector<MatQ> t;
  t.reserve(kappa.size());
  for (const auto& k : kappa) {
    MatQ m = matq_scale(k, lambda / 2);
    for (int i = 0; i < dim; ++i) m[i][i] += z_scalar / hv;
    t.push_back(std::move(m));
  }
  return t;
}

ConnRep rep_by_name(const std::string& name) {
  if (name == "cherednik-sl3") return build_dunkl_conn_rep(3, Rat(1), Rat(2, 3));
  if (name == "cherednik-sl4") return build_dunkl_conn_rep(4, Rat(1), Rat(3, 4));
  if (name == "smallrep-sl3") return build_reflection_conn_rep(3, Rat(1), Rat(2, 3));
  if (name == "smallrep-sl4") return build_reflection_conn_rep(4, Rat(1), Rat(3, 4));
  if (name == "zero") return build_zero_rep(4, 2);
  if (name == "adjoint-cartan-sl3") return build_adjoint_cartan_rep(3);
  if (name == "adjoint-cartan-sl4") return build_adjoint_cartan_rep(4);
  throw std::invalid_argument("unknown model: " + name);
}

KzbForm::KzbForm(ConnRep rep, Cplx tau, int ad_order, int trunc)
    : rep_(std::move(rep)), eng_(tau, trunc), ad_order_(ad_order) {
  const RootSystem& rs = rep_.rs;
  const int r = rs.rank;
  for (std::size_t g = 0; g < rs.num_positive(); ++g) {
    auto p = root_pairings(rs, rs.positive_root(g).v);
    std::vector<double> pd(r);
    for (int j = 0; j < r; ++j) pd[j] = p[j].convert_to<double>();
    pair_.push_back(std::move(pd));
    t_.push_back(matc_from_q(rep_.t_pos[g]));
    if (rep_.has_x) {
      auto gvee = covee_coords(rs, rs.positive_root(g).v);
      x_half_.push_back(matc_from_q(matq_scale(rep_.x_of(gvee), Rat(1, 2))));
    }
  }
  if (rep_.has_y) {
    // sum_i y(u^i) du_i contracted with d/d zeta_j gives y(a_j^vee) for any
    // dual basis pair, so the coefficient needs no gram inverse
    for (int j = 0; j < r; ++j) {
      std::vector<Rat> e(r, Rat(0));
      e[j] = Rat(1);
      y_dual_.push_back(matc_from_q(rep_.y_of(e)));
    }
  }
}

Cplx KzbForm::root_value(std::size_t pos_idx, const std::vector<Cplx>& zeta) const {
  Cplx w = 0.0;
  for (int j = 0; j < rank(); ++j) w += pair_[pos_idx][j] * zeta[j];
  return w;
}

MatC KzbForm::kernel_sum(std::size_t pos, Cplx w, bool derivative_kernel) const {
  XSeries ks = derivative_kernel
                   ? g_series(eng_, w, static_cast<std::size_t>(ad_order_))
                   : k_series(eng_, w, static_cast<std::size_t>(ad_order_));
  MatC cur = t_[pos];
  MatC out = matc_scale(cur, ks[0]);
  if (!rep_.has_x) return out;
  for (int p = 1; p <= ad_order_; ++p) {
    cur = matc_comm(x_half_[pos], cur);
    if (matc_max_norm(cur) == 0.0) break;
    matc_add_scaled(out, cur, ks[static_cast<std::size_t>(p)]);
  }
  return out;
}

std::vector<MatC> KzbForm::components(const std::vector<Cplx>& zeta) const {
  const int r = rank();
  std::vector<MatC> comps(r, MatC(dim()));
  for (std::size_t g = 0; g < pair_.size(); ++g) {
    MatC m = kernel_sum(g, root_value(g, zeta), false);
    for (int j = 0; j < r; ++j)
      if (pair_[g][j] != 0.0) matc_add_scaled(comps[j], m, pair_[g][j]);
  }
  if (rep_.has_y)
    for (int j = 0; j < r; ++j) matc_add_scaled(comps[j], y_dual_[j], -1.0);
  return comps;
}

MatC KzbForm::tau_component(const std::vector<Cplx>& zeta) const {
  MatC out(dim());
  for (std::size_t g = 0; g < pair_.size(); ++g)
    matc_add_scaled(out, kernel_sum(g, root_value(g, zeta), true), 1.0);
  const Cplx two_pi_i(0.0, 2.0 * std::numbers::pi);
  return matc_scale(out, 1.0 / two_pi_i);
}

double KzbForm::clearance(const std::vector<Cplx>& zeta) const {
  double best = 1e300;
  for (std::size_t g = 0; g < pair_.size(); ++g)
    best = std::min(best, eng_.lattice_distance(root_value(g, zeta)));
  return best;
}

double dform_residual(const KzbForm& f, const std::vector<Cplx>& zeta, double h) {
  const int r = f.rank();
  double worst = 0.0;
  std::vector<std::vector<MatC>> plus(r), minus(r);
  for (int i = 0; i < r; ++i) {
    auto zp = zeta, zm = zeta;
    zp[i] += h;
    zm[i] -= h;
    plus[i] = f.components(zp);
    minus[i] = f.components(zm);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      MatC dij = matc_scale(matc_sub(plus[i][j], minus[i][j]), 1.0 / (2 * h));
      MatC dji = matc_scale(matc_sub(plus[j][i], minus[j][i]), 1.0 / (2 * h));
      worst = std::max(worst, matc_max_norm(matc_sub(dij, dji)));
    }
  return worst;
}

double curvature_residual(const KzbForm& f, const std::vector<Cplx>& zeta, double h) {
  const int r = f.rank();
  auto base = f.components(zeta);
  double worst = 0.0;
  std::vector<std::vector<MatC>> plus(r), minus(r);
  for (int i = 0; i < r; ++i) {
    auto zp = zeta, zm = zeta;
    zp[i] += h;
    zm[i] -= h;
    plus[i] = f.components(zp);
    minus[i] = f.components(zm);
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      MatC dij = matc_scale(matc_sub(plus[i][j], minus[i][j]), 1.0 / (2 * h));
      MatC dji = matc_scale(matc_sub(plus[j][i], minus[j][i]), 1.0 / (2 * h));
      MatC fij = matc_sub(matc_sub(dij, dji), matc_comm(base[i], base[j]));
      worst = std::max(worst, matc_max_norm(fij));
    }
  return worst;
}

}  // namespace ecl
