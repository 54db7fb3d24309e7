#pragma once

#include <string>
#include <vector>

#include "ecl/rootsys.hpp"

namespace ecl {

// One length-classified family of ordered root pairs (alpha, beta) with
// alpha + beta again a root, together with the weight it carries in the
// normalized fourth-order invariant.
struct PairClassEntry {
  Rat len_a, len_b, len_ab;
  long long count = 0;
  Rat weight;
};

// Normalized fourth-order Casimir weight, evaluated three independent ways.
// All routes must agree exactly; consumers compare them.
struct ConstantReport {
  RootType type;
  int rank = 0;
  Rat tilde_c;             // direct ordered-pair sum
  Rat tilde_c_classified;  // frozen per-class weight table times pair counts
  Rat tilde_c_bracket;     // root-string route
  Rat c_over_lambda2;      // tilde_c / 4
  std::vector<PairClassEntry> classes;
};

// Direct route: sum over ordered pairs of roots whose sum is a root of
//   (1 - (a,b)^2 / ((a,a)(b,b))) * ((b,b)^2 + (a,a)^2) * (a+b, a+b)
// divided by 4 * rank * (rank - 1).
Rat tilde_c_general(const RootSystem& rs);

// Classified route: every admissible ordered pair falls into a squared-length
// class with a frozen weight; throws if a class is missing from the table.
Rat tilde_c_classified(const RootSystem& rs);

// Root-string route: each ordered pair contributes
//   ((a,a)(b,b) - (a,b)^2) * (a,a) * q * (r + 1) / 2
// with (r, q) the a-string through b, divided by rank * (rank - 1).
Rat tilde_c_bracket(const RootSystem& rs);

// Frozen weight table for the classified route.
std::vector<PairClassEntry> pair_weight_table(const RootSystem& rs);

ConstantReport constant_report(const RootSystem& rs);

}  // namespace ecl
