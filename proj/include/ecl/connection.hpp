#pragma once

#include <string>
#include <vector>

#include "ecl/cherednik.hpp"
#include "ecl/cmatrix.hpp"
#include "ecl/elliptic.hpp"
#include "ecl/rootsys.hpp"

namespace ecl {

// Exact matrix realization of the fiber data a connection form is assembled
// from: one matrix per positive root for the quadratic terms, plus optional
// commuting families indexed by the simple coroot directions.
struct ConnRep {
  std::string name;
  RootSystem rs;
  int dim = 0;
  std::vector<MatQ> t_pos;
  bool has_x = false;
  std::vector<MatQ> x_simple;
  bool has_y = false;
  std::vector<MatQ> y_simple;
  bool has_weyl = false;
  std::vector<MatQ> weyl_pos;

  MatQ x_of(const std::vector<Rat>& u_coroot) const;
  MatQ y_of(const std::vector<Rat>& u_coroot) const;
};

struct RelationCheck {
  std::string relation;
  bool applicable = false;
  bool pass = false;
  std::string detail;
};

struct FlatnessReport {
  std::string model;
  bool all_applicable_pass = true;
  std::vector<RelationCheck> checks;
};

// Exact commutator checks of the algebraic flatness relations the form
// assembly relies on: quadratic terms sum to a center inside each rank-2
// plane, the two coordinate families commute, mixed brackets produce the
// quadratic terms, and orthogonal directions decouple. Relations whose maps
// are absent are reported inapplicable, never silently passed.
FlatnessReport flatness_relations_check(const ConnRep& rep);

// Full model: multiplication, Dunkl and reflection action on the finite
// quotient module. Satisfies every relation exactly.
ConnRep build_dunkl_conn_rep(int n, const Rat& hbar, const Rat& c);
// Reflection representation with quadratic terms only; no x or y maps.
ConnRep build_reflection_conn_rep(int n, const Rat& hbar, const Rat& c);
// All maps present and zero.
ConnRep build_zero_rep(int n, int dim);
// Quadratic Casimir terms on the Cartan of the trace-zero matrices with zero
// x and y maps; deliberately violates the mixed bracket relation.
ConnRep build_adjoint_cartan_rep(int n);

// t = (lambda/2) kappa + (z / h_vee) id from per-root quadratic blocks.
std::vector<MatQ> casimir_t_from_kappa(const RootSystem& rs,
                                       const std::vector<MatQ>& kappa,
                                       const Rat& lambda, const Rat& z_scalar,
                                       int dim);

// cherednik-sl3, cherednik-sl4, smallrep-sl3, smallrep-sl4, zero
ConnRep rep_by_name(const std::string& name);

// Meromorphic matrix one-form in the coroot coordinates, built from theta
// kernels: for each positive root the kernel series in the nilpotent adjoint
// direction, paired against the coordinate differentials, minus the dual
// y-term. Nilpotency truncates the series exactly.
class KzbForm {
 public:
  KzbForm(ConnRep rep, Cplx tau, int ad_order = 8, int trunc = 40);

  int dim() const { return rep_.dim; }
  int rank() const { return rep_.rs.rank; }
  const ConnRep& rep() const { return rep_; }
  Cplx tau() const { return eng_.tau(); }

  Cplx root_value(std::size_t pos_idx, const std::vector<Cplx>& zeta) const;
  std::vector<MatC> components(const std::vector<Cplx>& zeta) const;
  // Computable fiber part of the tau-direction operator, normalized by 2 pi i.
  MatC tau_component(const std::vector<Cplx>& zeta) const;
  // Minimal lattice distance of any positive root value.
  double clearance(const std::vector<Cplx>& zeta) const;

 private:
  ConnRep rep_;
  ThetaEngine eng_;
  int ad_order_;
  std::vector<std::vector<double>> pair_;  // [pos][j] pairing with a_j^vee
  std::vector<MatC> t_, x_half_;
  std::vector<MatC> y_dual_;
  MatC kernel_sum(std::size_t pos, Cplx w, bool derivative_kernel) const;
};

// max_{i<j} |d_i A_j - d_j A_i| by central differences of step h
double dform_residual(const KzbForm& f, const std::vector<Cplx>& zeta, double h);
// max_{i<j} |d_i A_j - d_j A_i - [A_i, A_j]|
double curvature_residual(const KzbForm& f, const std::vector<Cplx>& zeta, double h);

}  // namespace ecl
