#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ecl/poly.hpp"

namespace ecl {

// Differential operators on PolyState values, built as immutable shared
// trees. Compose applies right to left, matching operator products.
enum class OpKind { MulPoly, MulInv, DX, DM, Sum, Compose };

struct OpNode;
using Op = std::shared_ptr<const OpNode>;

struct OpNode {
  OpKind kind;
  Poly poly;                              // MulPoly
  int a = 0, b = 0, i = 0;                // MulInv uses (a,b) with a<b; DX uses a; DM uses (a,i)
  std::vector<std::pair<Rat, Op>> terms;  // Sum
  std::vector<Op> factors;                // Compose
};

Op op_poly(Poly p);
Op op_const(const VarLayout& lay, const Rat& c);
Op op_one(const VarLayout& lay);
Op op_zero();
Op op_xvar(const VarLayout& lay, int a);
Op op_mvar(const VarLayout& lay, int a, int i);
Op op_dx(int a);
Op op_dm(int a, int i);
Op op_inv(int a, int b);  // multiplication by 1/(x_a - x_b), any a != b
Op op_sum(std::vector<std::pair<Rat, Op>> terms);
Op op_add(const Op& x, const Op& y);
Op op_sub(const Op& x, const Op& y);
Op op_scale(const Rat& c, const Op& x);
Op op_neg(const Op& x);
Op op_compose(std::vector<Op> factors);
Op op_mul(const Op& x, const Op& y);   // x after y
Op op_comm(const Op& x, const Op& y);  // x y - y x
Op op_pow_ad(const Op& x, const Op& target, int p);  // ad(x)^p(target)

PolyState op_apply(const Op& op, const PolyState& s);

}
