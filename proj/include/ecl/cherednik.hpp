#pragma once

#include <vector>

#include "ecl/poly.hpp"
#include "ecl/rootsys.hpp"

namespace ecl {

// Polynomial ring on the reflection representation of S_n in simple-coroot
// coordinates, with the Dunkl pairing of the rational Cherednik algebra at
// coupling (hbar, c).
struct DunklRing {
  explicit DunklRing(int n);

  int n = 0;
  RootSystem rs;   // type A, rank n - 1
  VarLayout lay;   // k = n - 1 coordinates, no letter block

  std::vector<std::vector<Rat>> coroot_gram;  // (a_i, a_j) over simple roots
  std::vector<std::vector<Rat>> dual_coords;  // w_j with (w_j, a_i) = delta_ij
  std::vector<std::vector<Rat>> root_form;    // positive gamma as linear form
  std::vector<std::vector<std::vector<Rat>>> refl_rows;  // substitutions

  // (u, .) as a linear polynomial, u given in coroot coordinates
  Poly coord_form(const std::vector<Rat>& u) const;
  Poly reflect_poly(std::size_t pos_idx, const Poly& p) const;
  // hbar d_u - c sum_{gamma > 0} (gamma, u) (1 - s_gamma) / (gamma, .)
  Poly dunkl_apply(const std::vector<Rat>& u, const Rat& hbar, const Rat& c,
                   const Poly& p) const;
  // contravariant pairing (f(T) g)(0)
  Rat pairing(const Rat& hbar, const Rat& c, const Poly& f, const Poly& g) const;
};

// Finite-dimensional quotient of the polynomial representation by the radical
// of the contravariant pairing. Basis vectors are the monomials surviving per
// degree; all operators act exactly on that basis.
struct DunklModule {
  int n = 0;
  Rat hbar, c;
  RootSystem rs;
  int dim = 0;
  std::vector<int> hilbert;  // quotient dimension per degree
  std::vector<int> grade;    // degree of each basis vector
  std::vector<MatQ> mult;    // multiplication by (a_j, .) per simple j
  std::vector<MatQ> dunkl;   // Dunkl derivative along a_j per simple j
  std::vector<MatQ> refl;    // reflection per positive root
};

// Throws if the pairing stays nondegenerate through max_degree.
DunklModule build_dunkl_module(int n, const Rat& hbar, const Rat& c,
                               int max_degree);

}  // namespace ecl
