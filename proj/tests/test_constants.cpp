#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <tuple>

#include "ecl/constants.hpp"

using namespace ecl;

namespace {

using ClassKey = std::tuple<Rat, Rat, Rat>;

std::map<ClassKey, long long> class_map(const std::vector<PairClassEntry>& v) {
  std::map<ClassKey, long long> m;
  for (const auto& e : v) m[{e.len_a, e.len_b, e.len_ab}] = e.count;
  return m;
}

}  // namespace

TEST_CASE("type A values grow linearly") {
  for (int rank = 3; rank <= 7; ++rank) {
    ConstantReport rep = constant_report(build_root_system(RootType::A, rank));
    Rat want(6 * (rank + 1));
    CHECK(rep.tilde_c == want);
    CHECK(rep.tilde_c_classified == want);
    CHECK(rep.tilde_c_bracket == want);
    CHECK(rep.c_over_lambda2 == want / 4);
  }
}

TEST_CASE("all three routes agree on simply laced systems") {
  const std::vector<std::pair<std::pair<RootType, int>, Rat>> table = {
      {{RootType::D, 4}, Rat(48)},  {{RootType::D, 5}, Rat(72)},
      {{RootType::E, 6}, Rat(144)}, {{RootType::E, 7}, Rat(288)},
      {{RootType::E, 8}, Rat(720)},
  };
  for (const auto& [key, want] : table) {
    ConstantReport rep = constant_report(build_root_system(key.first, key.second));
    CAPTURE(key.second);
    CHECK(rep.tilde_c == want);
    CHECK(rep.tilde_c_classified == want);
    CHECK(rep.tilde_c_bracket == want);
  }
}

TEST_CASE("mixed length systems split the string route off") {
  struct Row {
    RootType t;
    int rank;
    Rat direct;
    Rat bracket;
  };
  const std::vector<Row> table = {
      {RootType::B, 3, Rat(33), Rat(36)},     {RootType::B, 4, Rat(57), Rat(60)},
      {RootType::C, 3, Rat(12), Rat(15)},     {RootType::C, 4, Rat(15), Rat(18)},
      {RootType::F, 4, Rat(81), Rat(90)},     {RootType::G, 2, Rat(206, 9), Rat(80, 3)},
  };
  for (const Row& row : table) {
    ConstantReport rep = constant_report(build_root_system(row.t, row.rank));
    CAPTURE(row.rank);
    CHECK(rep.tilde_c == row.direct);
    CHECK(rep.tilde_c_classified == row.direct);
    CHECK(rep.tilde_c_bracket == row.bracket);
    CHECK(rep.tilde_c != rep.tilde_c_bracket);
    CHECK(rep.c_over_lambda2 == row.direct / 4);
  }
}

TEST_CASE("pair classes carry the frozen counts") {
  auto a3 = class_map(constant_report(build_root_system(RootType::A, 3)).classes);
  REQUIRE(a3.size() == 1);
  CHECK(a3[{Rat(2), Rat(2), Rat(2)}] == 48);

  auto b3 = class_map(constant_report(build_root_system(RootType::B, 3)).classes);
  REQUIRE(b3.size() == 4);
  CHECK(b3[{Rat(1), Rat(1), Rat(2)}] == 24);
  CHECK(b3[{Rat(1), Rat(2), Rat(1)}] == 24);
  CHECK(b3[{Rat(2), Rat(1), Rat(1)}] == 24);
  CHECK(b3[{Rat(2), Rat(2), Rat(2)}] == 48);

  auto c3 = class_map(constant_report(build_root_system(RootType::C, 3)).classes);
  REQUIRE(c3.size() == 4);
  CHECK(c3[{Rat(1), Rat(1), Rat(1)}] == 48);
  CHECK(c3[{Rat(1), Rat(1), Rat(2)}] == 24);
  CHECK(c3[{Rat(1), Rat(2), Rat(1)}] == 24);
  CHECK(c3[{Rat(2), Rat(1), Rat(1)}] == 24);
  CHECK(c3.find({Rat(2), Rat(2), Rat(2)}) == c3.end());

  auto f4 = class_map(constant_report(build_root_system(RootType::F, 4)).classes);
  REQUIRE(f4.size() == 5);
  CHECK(f4[{Rat(1), Rat(1), Rat(1)}] == 192);
  CHECK(f4[{Rat(1), Rat(1), Rat(2)}] == 144);
  CHECK(f4[{Rat(1), Rat(2), Rat(1)}] == 144);
  CHECK(f4[{Rat(2), Rat(1), Rat(1)}] == 144);
  CHECK(f4[{Rat(2), Rat(2), Rat(2)}] == 192);

  Rat g(2, 3);
  auto g2 = class_map(constant_report(build_root_system(RootType::G, 2)).classes);
  REQUIRE(g2.size() == 5);
  for (const auto& [key, count] : g2) CHECK(count == 12);
  CHECK(g2.count({g, g, g}) == 1);
  CHECK(g2.count({g, g, Rat(2)}) == 1);
  CHECK(g2.count({g, Rat(2), g}) == 1);
  CHECK(g2.count({Rat(2), g, g}) == 1);
  CHECK(g2.count({Rat(2), Rat(2), Rat(2)}) == 1);
}

TEST_CASE("frozen weight table entries") {
  RootSystem c3 = build_root_system(RootType::C, 3);
  auto wt = pair_weight_table(c3);
  REQUIRE(wt.size() == 4);
  auto weight_of = [&](Rat a, Rat b, Rat ab) -> Rat {
    for (const auto& e : wt)
      if (e.len_a == a && e.len_b == b && e.len_ab == ab) return e.weight;
    FAIL("missing class");
    return Rat(0);
  };
  CHECK(weight_of(Rat(1), Rat(1), Rat(1)) == Rat(3, 2));
  CHECK(weight_of(Rat(1), Rat(1), Rat(2)) == Rat(4));
  CHECK(weight_of(Rat(1), Rat(2), Rat(1)) == Rat(5, 2));
  CHECK(weight_of(Rat(2), Rat(1), Rat(1)) == Rat(5, 2));

  RootSystem b3 = build_root_system(RootType::B, 3);
  for (const auto& e : pair_weight_table(b3)) {
    if (e.len_a == 2 && e.len_b == 2) CHECK(e.weight == Rat(12));
    if (e.len_a == 1 && e.len_b == 1) CHECK(e.weight == Rat(4));
  }

  RootSystem g2 = build_root_system(RootType::G, 2);
  Rat g(2, 3);
  for (const auto& e : pair_weight_table(g2)) {
    if (e.len_a == g && e.len_b == g && e.len_ab == g) CHECK(e.weight == Rat(4, 9));
    if (e.len_a == 2 && e.len_b == 2) CHECK(e.weight == Rat(12));
  }

  RootSystem a3 = build_root_system(RootType::A, 3);
  auto wa = pair_weight_table(a3);
  REQUIRE(wa.size() == 1);
  CHECK(wa[0].weight == Rat(12));
}

TEST_CASE("classified totals reproduce the direct sum") {
  // the per-class weights times counts must integrate back to the direct route
  for (auto [t, rank] : std::vector<std::pair<RootType, int>>{
           {RootType::A, 5}, {RootType::B, 4}, {RootType::C, 4},
           {RootType::D, 5}, {RootType::F, 4}, {RootType::G, 2}}) {
    RootSystem rs = build_root_system(t, rank);
    CHECK(tilde_c_general(rs) == tilde_c_classified(rs));
  }
}

TEST_CASE("rank below two is rejected") {
  RootSystem a1 = build_root_system(RootType::A, 1);
  CHECK_THROWS_AS(tilde_c_general(a1), std::invalid_argument);
  CHECK_THROWS_AS(tilde_c_bracket(a1), std::invalid_argument);
  CHECK_THROWS_AS(constant_report(a1), std::invalid_argument);
}
