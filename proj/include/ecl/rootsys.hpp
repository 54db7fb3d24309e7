#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecl/rational.hpp"

namespace ecl {

// Roots are stored with exact integer coordinates in an ambient lattice whose
// inner product is a per-type rational Gram matrix.  Long roots always have
// squared length 2; shorts come out 1 (B/C/F4) or 2/3 (G2).
enum class RootType { A, B, C, D, E, F, G };

RootType root_type_from_string(const std::string& s);
std::string root_type_to_string(RootType t);

using RootCoords = std::vector<long long>;

struct Root {
  RootCoords v;
  bool positive = false;
  long long index = -1;  // position in the canonical ordering of all roots
};

class RootSystem {
 public:
  RootType type;
  int rank = 0;
  int ambient_dim = 0;
  // Diagonal Gram: inner(e_i, e_j) = gram_diag[i] * delta_ij.  All supported
  // coordinate models are orthogonal with a per-axis rational weight.
  std::vector<Rat> gram_diag;
  std::vector<Root> roots;               // canonical (lexicographic) order
  std::vector<int> simple_indices;       // indices into roots
  std::vector<long long> positive_indices;

  Rat inner(const RootCoords& a, const RootCoords& b) const;
  Rat length_sq(const RootCoords& a) const { return inner(a, a); }
  // Cartan pairing <beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha).
  Rat pairing(const RootCoords& beta, const RootCoords& alpha) const;

  bool is_root(const RootCoords& a) const;
  // Index in `roots`, or -1.
  long long find(const RootCoords& a) const;

  std::size_t num_roots() const { return roots.size(); }
  std::size_t num_positive() const { return positive_indices.size(); }
  const Root& positive_root(std::size_t k) const {
    return roots[static_cast<std::size_t>(positive_indices[k])];
  }

 private:
  std::map<RootCoords, long long> lookup_;
  friend RootSystem build_root_system(RootType, int);
};

// Constructs the root system with exact coordinates, canonical order, and
// orientation (positivity) fixed by simple-root expansion.  E-types are
// generated by reflection closure from the simple roots.
RootSystem build_root_system(RootType type, int rank);

// h^vee from (u, v) = (1/h^vee) sum_{gamma > 0} (gamma, u)(gamma, v), probed on
// every simple root; throws if the probes disagree.
Rat dual_coxeter(const RootSystem& rs);

// The alpha-string through beta: beta - r alpha, ..., beta + q alpha.
struct RootString {
  int r = 0;
  int q = 0;
};
RootString root_string(const RootSystem& rs, const RootCoords& alpha,
                       const RootCoords& beta);

// s_alpha(beta) = beta - <beta, alpha^vee> alpha.
RootCoords reflect(const RootSystem& rs, const RootCoords& alpha,
                   const RootCoords& beta);

// Ordered pairs (alpha, beta) with alpha + beta a root, classified by the
// squared lengths (|alpha|^2, |beta|^2, |alpha+beta|^2).
struct SumPairClass {
  Rat len_a, len_b, len_ab;
  long long count = 0;
};
std::vector<SumPairClass> classify_sum_pairs(const RootSystem& rs);

// Positive roots grouped by the rank-2 subsystems they span: each group lists
// the positions (into the positive ordering) of every positive root lying in
// the plane of some non-proportional pair.  Rank-1 systems return one group.
std::vector<std::vector<std::size_t>> rank2_planes(const RootSystem& rs);

}  // namespace ecl
