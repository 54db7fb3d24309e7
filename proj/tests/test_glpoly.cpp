#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ecl/glpoly.hpp"

using namespace ecl;

namespace {

const VarLayout kLay{2, 3};

PolyState mono(const VarLayout& lay, const Poly& p) { return ps_from_poly(lay, p); }

Poly mv(const VarLayout& lay, int a, int i) { return poly_var(lay, lay.mvar(a, i)); }

bool identity_holds(const Op& lhs, const Op& rhs, const StateFamily& fam) {
  CheckResult r = check_identity("t", lhs, rhs, fam, false);
  if (!r.pass) {
    INFO("state ", r.fail_state, " residual ", r.fail_residual);
    return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pair indexing is a bijection") {
  CHECK(pair_count(2) == 1);
  CHECK(pair_count(4) == 6);
  for (int k : {2, 3, 4, 5}) {
    int idx = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        CHECK(pair_index(k, a, b) == idx);
        auto [pa, pb] = pair_unindex(k, idx);
        CHECK(pa == a);
        CHECK(pb == b);
        ++idx;
      }
    CHECK(idx == pair_count(k));
  }
}

TEST_CASE("polynomial primitives") {
  VarLayout lay{2, 2};
  Poly x0 = poly_var(lay, lay.xvar(0));
  Poly x1 = poly_var(lay, lay.xvar(1));
  Poly m00 = mv(lay, 0, 0);

  Poly diff = x0;
  poly_add_scaled(diff, x1, Rat(-1));
  Poly p = poly_mul(diff, m00);

  // derivative product rule on (x0 - x1) m00
  Poly dp = poly_derivative(p, lay.xvar(0));
  CHECK(dp == m00);
  CHECK(poly_degree_in(p, lay.xvar(0)) == 1);
  CHECK(poly_total_degree(p) == 2);

  auto q = poly_divexact_diff(p, lay.xvar(0), lay.xvar(1));
  REQUIRE(q.has_value());
  CHECK(*q == m00);
  CHECK(!poly_divexact_diff(m00, lay.xvar(0), lay.xvar(1)).has_value());

  // x0 := x1 collapses the difference
  CHECK(poly_is_zero(poly_subst_var_equal(diff, lay.xvar(0), lay.xvar(1))));

  std::vector<Rat> form(lay.nvars(), Rat(0));
  form[lay.xvar(0)] = Rat(1);
  form[lay.xvar(1)] = Rat(-1);
  auto ql = poly_divexact_linear(p, form);
  REQUIRE(ql.has_value());
  CHECK(*ql == m00);
}

TEST_CASE("states keep denominators canonical") {
  VarLayout lay{3, 2};
  Poly x0 = poly_var(lay, lay.xvar(0));
  Poly x1 = poly_var(lay, lay.xvar(1));
  Poly diff = x0;
  poly_add_scaled(diff, x1, Rat(-1));

  PolyState s = mono(lay, poly_mul(diff, mv(lay, 0, 0)));
  PolyState t = ps_mul_inv(s, 0, 1);
  // the difference divides the numerator exactly, so no denominator survives
  for (int d : t.den) CHECK(d == 0);
  CHECK(ps_equal(t, mono(lay, mv(lay, 0, 0))));

  PolyState u = ps_mul_inv(mono(lay, mv(lay, 0, 0)), 1, 2);
  CHECK(u.den[pair_index(3, 1, 2)] == 1);
  PolyState back = ps_mul_poly(u, [&] {
    Poly d = poly_var(lay, lay.xvar(1));
    poly_add_scaled(d, poly_var(lay, lay.xvar(2)), Rat(-1));
    return d;
  }());
  CHECK(ps_equal(back, mono(lay, mv(lay, 0, 0))));

  PolyState z = ps_zero(lay);
  ps_add_scaled(z, u, Rat(2));
  ps_add_scaled(z, u, Rat(-2));
  CHECK(ps_is_zero(z));
}

TEST_CASE("matrix unit brackets on the letter block") {
  StateFamily fam = make_family(kLay, 2, 1, 1, WeightMode::None);

  // off-diagonal times off-diagonal
  CHECK(identity_holds(op_comm(act_E(kLay, 0, 1), act_E(kLay, 1, 2)),
                       act_E(kLay, 0, 2), fam));
  CHECK(identity_holds(op_comm(act_E(kLay, 0, 1), act_E(kLay, 2, 0)),
                       op_neg(act_E(kLay, 2, 1)), fam));
  CHECK(identity_holds(op_comm(act_E(kLay, 0, 1), act_E(kLay, 1, 0)),
                       op_sub(act_E(kLay, 0, 0), act_E(kLay, 1, 1)), fam));
  // diagonal weights
  CHECK(identity_holds(op_comm(act_E(kLay, 0, 0), act_E(kLay, 0, 1)),
                       act_E(kLay, 0, 1), fam));
  CHECK(identity_holds(op_comm(act_E(kLay, 2, 2), act_E(kLay, 0, 1)), op_zero(), fam));

  // row movers with disjoint rows commute; same for column movers
  CHECK(identity_holds(op_comm(gln_gen(kLay, 0, 1, 0), gln_gen(kLay, 1, 2, 1)),
                       op_zero(), fam));
  CHECK(identity_holds(op_comm(glk_gen(kLay, 0, 1, 0), glk_gen(kLay, 0, 1, 1)),
                       op_zero(), fam));
  CHECK(identity_holds(op_comm(glk_gen(kLay, 0, 1, 0), glk_gen(kLay, 1, 0, 0)),
                       op_sub(glk_gen(kLay, 0, 0, 0), glk_gen(kLay, 1, 1, 0)), fam));
  // the two actions centralize each other
  CHECK(identity_holds(op_comm(glk_gen(kLay, 0, 1, 2), act_E(kLay, 0, 1)), op_zero(),
                       fam));
}

TEST_CASE("diagonal current generators are gated") {
  CHECK_THROWS_AS(act_K(kLay, 0, 0), UseCartanError);
  CHECK_THROWS_AS(act_Q(kLay, 1, 1), UseCartanError);
  CHECK_THROWS_AS(act_P(kLay, 2, 2), UseCartanError);
  CHECK_THROWS_AS(current_mode(kLay, 1, 1, 1, ModeKind::U), UseCartanError);

  StateFamily fam = make_family(kLay, 2, 1, 1, WeightMode::None);
  std::vector<Rat> u{Rat(1), Rat(-1), Rat(0)};
  CHECK(identity_holds(act_K_h(kLay, u), act_K_cartan(kLay, 0, 1), fam));
  CHECK(identity_holds(act_Q_h(kLay, u), act_Q_cartan(kLay, 0, 1), fam));
  CHECK(identity_holds(act_E_h(kLay, u),
                       op_sub(act_E(kLay, 0, 0), act_E(kLay, 1, 1)), fam));

  std::vector<Rat> bad{Rat(1), Rat(0), Rat(0)};
  CHECK_THROWS_AS(act_K_h(kLay, bad), std::invalid_argument);
  CHECK_THROWS_AS(act_Q_h(kLay, bad), std::invalid_argument);
  // the letter torus is not restricted to traceless vectors
  CHECK(identity_holds(act_E_h(kLay, bad), act_E(kLay, 0, 0), fam));
  CHECK_THROWS_AS(act_E_h(kLay, {Rat(1), Rat(-1)}), std::invalid_argument);
}

TEST_CASE("central element acts by the degree formula") {
  StateFamily fam = make_family(kLay, 2, 1, 1, WeightMode::None);
  Op zn = act_Zn(kLay);
  CHECK(identity_holds(op_comm(zn, act_K(kLay, 0, 1)), op_zero(), fam));
  CHECK(identity_holds(op_comm(zn, act_Q(kLay, 1, 2)), op_zero(), fam));

  std::vector<std::pair<Rat, Op>> exact;
  for (int a = 0; a < kLay.k; ++a)
    exact.push_back({Rat(2), op_mul(act_rowdeg(kLay, a), act_rowdeg(kLay, a))});
  exact.push_back({Rat(2 * kLay.n), act_euler_m(kLay)});
  CHECK(identity_holds(zn, op_sum(std::move(exact)), fam));
}

TEST_CASE("commutator of the two current letters") {
  StateFamily fam = make_family(kLay, 2, 1, 1, WeightMode::None);
  for (auto [a, b, c, d] : std::vector<std::array<int, 4>>{
           {0, 1, 1, 2}, {0, 1, 2, 0}, {0, 2, 2, 1}, {1, 2, 0, 1}, {0, 1, 0, 1}}) {
    Op lhs = op_comm(act_K(kLay, a, b), act_Q(kLay, c, d));
    Op rhs = op_add(main_relation_rhs(kLay, a, b, c, d),
                    main_relation_correction(kLay, a, b, c, d));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(d);
    CHECK(identity_holds(lhs, rhs, fam));
  }
}

TEST_CASE("correction term on a repeated letter") {
  // on m_{0,2}^2 the quadruple (0,1,1,2) produces exactly m_{0,0} m_{0,2}
  Poly sq = poly_mul(mv(kLay, 0, 2), mv(kLay, 0, 2));
  PolyState s = mono(kLay, sq);
  PolyState got = op_apply(main_relation_correction(kLay, 0, 1, 1, 2), s);
  PolyState want = mono(kLay, poly_mul(mv(kLay, 0, 0), mv(kLay, 0, 2)));
  CHECK(ps_equal(got, want));

  // on any row-multilinear state the correction vanishes
  PolyState lin = mono(kLay, poly_mul(mv(kLay, 0, 2), mv(kLay, 1, 2)));
  CHECK(ps_is_zero(op_apply(main_relation_correction(kLay, 0, 1, 1, 2), lin)));
}

TEST_CASE("inadmissible quadruples are rejected") {
  CHECK_THROWS_AS(main_relation_rhs(kLay, 0, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(main_relation_rhs(kLay, 0, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(main_relation_rhs(kLay, 0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(main_relation_correction(kLay, 0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("families enumerate the advertised states") {
  StateFamily fam = make_family(VarLayout{2, 4}, 3, 2, 1, WeightMode::None);
  CHECK(fam.states.size() == 1980);
  CHECK(fam.describe() == "m<=3,x<=2,inv<=1");

  StateFamily balanced_rows = make_family(kLay, 2, 1, 0, WeightMode::SlkZero);
  CHECK(!balanced_rows.states.empty());
  for (const PolyState& s : balanced_rows.states) {
    PolyState d = op_apply(op_sub(act_rowdeg(kLay, 0), act_rowdeg(kLay, 1)), s);
    CHECK(ps_is_zero(d));
  }

  StateFamily balanced_cols = make_family(kLay, 2, 1, 0, WeightMode::SlnZero);
  CHECK(!balanced_cols.states.empty());
  for (const PolyState& s : balanced_cols.states)
    for (int i = 0; i + 1 < kLay.n; ++i) {
      PolyState d =
          op_apply(op_sub(act_E(kLay, i, i), act_E(kLay, i + 1, i + 1)), s);
      CHECK(ps_is_zero(d));
    }

  CHECK(weight_mode_name(WeightMode::None) == "none");
  CHECK(weight_mode_name(WeightMode::SlkZero) == "slk_zero");
  CHECK(weight_mode_name(WeightMode::SlnZero) == "sln_zero");
}

TEST_CASE("bracket words certify mode builders") {
  BracketWord good = bw_pair(bw_leaf(0, 1), bw_leaf(1, 2));
  MatQ m = bw_matrix(3, good);
  MatQ e02 = matq_zero(3, 3);
  e02[0][2] = Rat(1);
  CHECK(m == e02);

  CHECK_NOTHROW(mode_from_word(kLay, good, 0, 2, ModeKind::U));
  CHECK_THROWS_AS(mode_from_word(kLay, good, 0, 1, ModeKind::U), CurrentModeError);

  StateFamily fam = make_family(kLay, 2, 1, 1, WeightMode::None);
  CHECK(identity_holds(current_mode(kLay, 0, 1, 0, ModeKind::U), act_E(kLay, 0, 1),
                       fam));
  CHECK(identity_holds(current_mode(kLay, 0, 1, 1, ModeKind::U), act_Q(kLay, 0, 1),
                       fam));
  CHECK(identity_holds(current_mode(kLay, 0, 1, 1, ModeKind::V), act_K(kLay, 0, 1),
                       fam));
  CHECK_THROWS_AS(current_mode(kLay, 0, 1, -1, ModeKind::U), std::invalid_argument);
}

TEST_CASE("iterated ad of commuting operators vanishes") {
  StateFamily fam = make_family(kLay, 2, 1, 0, WeightMode::None);
  Op x = glk_gen(kLay, 0, 1, 0);
  Op t = glk_gen(kLay, 0, 1, 1);
  CHECK(identity_holds(op_pow_ad(x, t, 0), t, fam));
  CHECK(identity_holds(op_pow_ad(x, t, 1), op_zero(), fam));
  CHECK(identity_holds(op_pow_ad(x, t, 3), op_zero(), fam));
}

TEST_CASE("composed torus images differ by the sign convention") {
  Poly p = poly_mul(mv(kLay, 0, 0), mv(kLay, 0, 1));
  PolyState s = mono(kLay, p);
  PolyState plus = op_apply(aell_t(kLay, 0, 1, 1), s);
  PolyState minus = op_apply(aell_t(kLay, 0, 1, -1), s);
  PolyState sum = plus;
  ps_add_scaled(sum, minus, Rat(1));
  CHECK(ps_is_zero(sum));  // opposite signs of the same operator
  CHECK(!ps_equal(plus, minus));
}

TEST_CASE("binomial helpers") {
  CHECK(binomial(5, 2) == Int(10));
  CHECK(binomial(12, 6) == Int(924));
  CHECK(binomial(3, 5) == Int(0));
  CHECK(binomial(5, -1) == Int(0));
  CHECK(factorial(6) == Int(720));
  // column sums of the triangle telescope one row down
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) {
        Int s = 0;
        for (int m = 0; m <= n; ++m) s += binomial(m, j) * binomial(n - m, k - j);
        CHECK(s == binomial(n + 1, k + 1));
      }
}

TEST_CASE("suite runner") {
  SuiteReport zn = run_suite("zn", 2, 3, 3, false);
  CHECK(zn.all_asserted_pass);
  CHECK(zn.suite == "zn");
  CHECK(zn.k == 2);
  CHECK(zn.identities.size() >= 5);
  for (const auto& ir : zn.identities) CHECK(ir.ok());

  SuiteReport mr = run_suite("main-relation", 2, 3, 2, false);
  CHECK(mr.all_asserted_pass);
  for (const auto& ir : mr.identities) CHECK(ir.ok());

  CHECK_THROWS_AS(run_suite("bogus", 2, 3, 1, false), std::invalid_argument);
}

TEST_CASE("realization comparison and torus probe") {
  SuiteReport dual = run_duality(2, 3, 2, 1, false);
  CHECK(dual.all_asserted_pass);
  for (const auto& ir : dual.identities) CHECK(ir.ok());

  SuiteReport probe = run_sl2_probe(2, 4, 1, false);
  CHECK(probe.all_asserted_pass);
  CHECK(!probe.identities.empty());
  for (const auto& ir : probe.identities) CHECK(ir.status == "probe");
}
