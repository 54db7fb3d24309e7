#include "ecl/diffop.hpp"

#include <stdexcept>

namespace ecl {

namespace {

Op make(OpNode n) { return std::make_shared<const OpNode>(std::move(n)); }

}  // namespace

Op op_poly(Poly p) {
  OpNode n;
  n.kind = OpKind::MulPoly;
  n.poly = std::move(p);
  return make(std::move(n));
}

Op op_const(const VarLayout& lay, const Rat& c) { return op_poly(poly_const(lay, c)); }

Op op_one(const VarLayout& lay) { return op_const(lay, Rat(1)); }

Op op_zero() {
  OpNode n;
  n.kind = OpKind::Sum;
  return make(std::move(n));
}

Op op_xvar(const VarLayout& lay, int a) { return op_poly(poly_var(lay, lay.xvar(a))); }

Op op_mvar(const VarLayout& lay, int a, int i) {
  return op_poly(poly_var(lay, lay.mvar(a, i)));
}

Op op_dx(int a) {
  OpNode n;
  n.kind = OpKind::DX;
  n.a = a;
  return make(std::move(n));
}

Op op_dm(int a, int i) {
  OpNode n;
  n.kind = OpKind::DM;
  n.a = a;
  n.i = i;
  return make(std::move(n));
}

Op op_inv(int a, int b) {
  if (a == b) throw std::invalid_argument("op_inv: equal indices");
  if (a < b) {
    OpNode n;
    n.kind = OpKind::MulInv;
    n.a = a;
    n.b = b;
    return make(std::move(n));
  }
  // 1/(x_a - x_b) = -1/(x_b - x_a), keep the stored node canonical
  return op_scale(Rat(-1), op_inv(b, a));
}

Op op_sum(std::vector<std::pair<Rat, Op>> terms) {
  OpNode n;
  n.kind = OpKind::Sum;
  n.terms = std::move(terms);
  return make(std::move(n));
}

Op op_add(const Op& x, const Op& y) { return op_sum({{Rat(1), x}, {Rat(1), y}}); }

Op op_sub(const Op& x, const Op& y) { return op_sum({{Rat(1), x}, {Rat(-1), y}}); }

Op op_scale(const Rat& c, const Op& x) { return op_sum({{c, x}}); }

Op op_neg(const Op& x) { return op_scale(Rat(-1), x); }

Op op_compose(std::vector<Op> factors) {
  OpNode n;
  n.kind = OpKind::Compose;
  n.factors = std::move(factors);
  return make(std::move(n));
}

Op op_mul(const Op& x, const Op& y) { return op_compose({x, y}); }

Op op_comm(const Op& x, const Op& y) {
  return op_sum({{Rat(1), op_mul(x, y)}, {Rat(-1), op_mul(y, x)}});
}

Op op_pow_ad(const Op& x, const Op& target, int p) {
  Op r = target;
  for (int j = 0; j < p; ++j) r = op_comm(x, r);
  return r;
}

PolyState op_apply(const Op& op, const PolyState& s) {
  if (ps_is_zero(s)) return ps_zero(s.lay);
  switch (op->kind) {
    case OpKind::MulPoly:
      return ps_mul_poly(s, op->poly);
    case OpKind::MulInv:
      return ps_mul_inv(s, op->a, op->b);
    case OpKind::DX:
      return ps_dx(s, op->a);
    case OpKind::DM:
      return ps_dm(s, op->a, op->i);
    case OpKind::Sum: {
      PolyState acc = ps_zero(s.lay);
      for (const auto& [c, t] : op->terms) {
        if (c == 0) continue;
        PolyState r = op_apply(t, s);
        if (!ps_is_zero(r)) ps_add_scaled(acc, r, c);
      }
      return acc;
    }
    case OpKind::Compose: {
      PolyState cur = s;
      for (auto it = op->factors.rbegin(); it != op->factors.rend(); ++it) {
        cur = op_apply(*it, cur);
        if (ps_is_zero(cur)) return ps_zero(s.lay);
      }
      return cur;
    }
  }
  throw std::logic_error("op_apply: bad node");
}

}
