#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ecl/rootsys.hpp"

using namespace ecl;

namespace {

RootCoords neg(const RootCoords& v) {
  RootCoords out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RootCoords add(const RootCoords& a, const RootCoords& b) {
  RootCoords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RootCoords add_mult(const RootCoords& a, const RootCoords& b, long long k) {
  RootCoords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + k * b[i];
  return out;
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace

TEST_CASE("enumeration counts and dual coxeter numbers") {
  struct Row {
    RootType type;
    int rank;
    std::size_t roots;
    long long hvee;
  };
  const Row rows[] = {
      {RootType::A, 1, 2, 2},    {RootType::A, 3, 12, 4},  {RootType::A, 7, 56, 8},
      {RootType::B, 2, 8, 3},    {RootType::B, 3, 18, 5},  {RootType::B, 4, 32, 7},
      {RootType::C, 3, 18, 4},   {RootType::C, 4, 32, 5},  {RootType::D, 4, 24, 6},
      {RootType::D, 5, 40, 8},   {RootType::E, 6, 72, 12}, {RootType::E, 7, 126, 18},
      {RootType::E, 8, 240, 30}, {RootType::F, 4, 48, 9},  {RootType::G, 2, 12, 4},
  };
  for (const Row& row : rows) {
    CAPTURE(root_type_to_string(row.type));
    CAPTURE(row.rank);
    RootSystem rs = build_root_system(row.type, row.rank);
    CHECK(rs.num_roots() == row.roots);
    CHECK(rs.num_positive() == row.roots / 2);
    CHECK(dual_coxeter(rs) == Rat(row.hvee));
    CHECK(static_cast<int>(rs.simple_indices.size()) == row.rank);
  }
}

TEST_CASE("length normalization per type") {
  auto lengths = [](const RootSystem& rs) {
    std::set<Rat> out;
    for (const Root& r : rs.roots) out.insert(rs.length_sq(r.v));
    return out;
  };
  CHECK(lengths(build_root_system(RootType::A, 4)) == std::set<Rat>{Rat(2)});
  CHECK(lengths(build_root_system(RootType::D, 4)) == std::set<Rat>{Rat(2)});
  CHECK(lengths(build_root_system(RootType::E, 6)) == std::set<Rat>{Rat(2)});
  CHECK(lengths(build_root_system(RootType::B, 3)) == std::set<Rat>{Rat(1), Rat(2)});
  CHECK(lengths(build_root_system(RootType::C, 3)) == std::set<Rat>{Rat(1), Rat(2)});
  CHECK(lengths(build_root_system(RootType::F, 4)) == std::set<Rat>{Rat(1), Rat(2)});
  CHECK(lengths(build_root_system(RootType::G, 2)) == std::set<Rat>{Rat(2, 3), Rat(2)});
}

TEST_CASE("roots come in opposite pairs with exactly one positive") {
  for (auto [t, r] : {std::pair{RootType::B, 3}, {RootType::G, 2}, {RootType::E, 6}}) {
    RootSystem rs = build_root_system(t, r);
    std::size_t positives = 0;
    for (const Root& root : rs.roots) {
      long long j = rs.find(neg(root.v));
      REQUIRE(j >= 0);
      CHECK(rs.roots[static_cast<std::size_t>(j)].positive != root.positive);
      if (root.positive) ++positives;
    }
    CHECK(positives == rs.num_positive());
  }
}

TEST_CASE("lookup agrees with enumeration and systems are reduced") {
  for (auto [t, r] : {std::pair{RootType::A, 3}, {RootType::C, 3}, {RootType::F, 4}}) {
    RootSystem rs = build_root_system(t, r);
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
      CHECK(rs.find(rs.roots[i].v) == static_cast<long long>(i));
      CHECK(rs.is_root(rs.roots[i].v));
      RootCoords twice = add(rs.roots[i].v, rs.roots[i].v);
      CHECK(!rs.is_root(twice));
    }
    RootCoords zero(static_cast<std::size_t>(rs.ambient_dim), 0);
    CHECK(!rs.is_root(zero));
  }
}

TEST_CASE("cartan pairings are integers bounded by 3") {
  for (auto [t, r] : {std::pair{RootType::B, 4}, {RootType::G, 2}, {RootType::E, 7}}) {
    RootSystem rs = build_root_system(t, r);
    for (const Root& a : rs.roots)
      for (const Root& b : rs.roots) {
        Rat p = rs.pairing(a.v, b.v);
        CHECK(is_integer(p));
        CHECK(boost::multiprecision::abs(boost::multiprecision::numerator(p)) <= 4);
        if (a.v != b.v && a.v != neg(b.v))
          CHECK(boost::multiprecision::abs(boost::multiprecision::numerator(p)) <= 3);
      }
  }
}

TEST_CASE("reflections permute the root set") {
  for (auto [t, r] : {std::pair{RootType::B, 3}, {RootType::G, 2}, {RootType::D, 4}}) {
    RootSystem rs = build_root_system(t, r);
    for (const Root& a : rs.roots) {
      CHECK(reflect(rs, a.v, a.v) == neg(a.v));
      for (const Root& b : rs.roots) {
        RootCoords im = reflect(rs, a.v, b.v);
        CHECK(rs.is_root(im));
        CHECK(reflect(rs, a.v, im) == b.v);  // involution
      }
    }
  }
}

TEST_CASE("root strings close, match the reflection count, and stop") {
  int seen_len[4] = {0, 0, 0, 0};
  for (auto [t, r] : {std::pair{RootType::A, 3}, {RootType::B, 3}, {RootType::C, 3},
                      {RootType::F, 4}, {RootType::G, 2}}) {
    RootSystem rs = build_root_system(t, r);
    for (const Root& a : rs.roots)
      for (const Root& b : rs.roots) {
        if (b.v == a.v || b.v == neg(a.v)) continue;
        RootString st = root_string(rs, a.v, b.v);
        CHECK(Rat(st.r - st.q) == rs.pairing(b.v, a.v));
        for (int k = -st.r; k <= st.q; ++k) CHECK(rs.is_root(add_mult(b.v, a.v, k)));
        CHECK(!rs.is_root(add_mult(b.v, a.v, st.q + 1)));
        CHECK(!rs.is_root(add_mult(b.v, a.v, -st.r - 1)));
        REQUIRE(st.r + st.q <= 3);
        seen_len[st.r + st.q]++;
        if (rs.is_root(add(a.v, b.v))) {
          // the squared structure constant q(r+1)(a+b,a+b)/(b,b) is the
          // perfect square (r+1)^2 in every case
          Rat csq = Rat(st.q) * (st.r + 1) * rs.length_sq(add(a.v, b.v)) /
                    rs.length_sq(b.v);
          CHECK(csq == Rat((st.r + 1) * (st.r + 1)));
        }
      }
  }
  CHECK(seen_len[1] > 0);
  CHECK(seen_len[2] > 0);
  CHECK(seen_len[3] > 0);  // only G2 reaches strings of four roots
}

TEST_CASE("maximal string length per type") {
  auto max_len = [](const RootSystem& rs) {
    int m = 0;
    for (const Root& a : rs.roots)
      for (const Root& b : rs.roots) {
        if (b.v == a.v || b.v == neg(a.v)) continue;
        RootString st = root_string(rs, a.v, b.v);
        m = std::max(m, st.r + st.q);
      }
    return m;
  };
  CHECK(max_len(build_root_system(RootType::A, 3)) == 1);
  CHECK(max_len(build_root_system(RootType::B, 3)) == 2);
  CHECK(max_len(build_root_system(RootType::C, 3)) == 2);
  CHECK(max_len(build_root_system(RootType::G, 2)) == 3);
}

TEST_CASE("sum pair classes") {
  auto classes = [](RootType t, int r) {
    std::vector<std::tuple<Rat, Rat, Rat, long long>> out;
    for (const auto& c : classify_sum_pairs(build_root_system(t, r)))
      out.push_back({c.len_a, c.len_b, c.len_ab, c.count});
    std::sort(out.begin(), out.end());
    return out;
  };
  const Rat L(2), s(1), g(2, 3);
  CHECK(classes(RootType::A, 3) ==
        std::vector<std::tuple<Rat, Rat, Rat, long long>>{{L, L, L, 48}});
  CHECK(classes(RootType::B, 3) ==
        std::vector<std::tuple<Rat, Rat, Rat, long long>>{
            {s, s, L, 24}, {s, L, s, 24}, {L, s, s, 24}, {L, L, L, 48}});
  CHECK(classes(RootType::C, 3) ==
        std::vector<std::tuple<Rat, Rat, Rat, long long>>{
            {s, s, s, 48}, {s, s, L, 24}, {s, L, s, 24}, {L, s, s, 24}});
  CHECK(classes(RootType::G, 2) ==
        std::vector<std::tuple<Rat, Rat, Rat, long long>>{{g, g, g, 12},
                                                          {g, g, L, 12},
                                                          {g, L, g, 12},
                                                          {L, g, g, 12},
                                                          {L, L, L, 12}});
  // swapping the pair order is a bijection, so mirrored classes match
  for (auto [t, r] : {std::pair{RootType::B, 4}, {RootType::F, 4}}) {
    auto cs = classes(t, r);
    for (const auto& [a, b, ab, count] : cs) {
      bool found = false;
      for (const auto& [a2, b2, ab2, count2] : cs)
        if (a2 == b && b2 == a && ab2 == ab && count2 == count) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("rank 2 plane grouping") {
  auto sizes = [](RootType t, int r) {
    std::vector<std::size_t> out;
    for (const auto& g : rank2_planes(build_root_system(t, r))) out.push_back(g.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(sizes(RootType::A, 3) == std::vector<std::size_t>{2, 2, 2, 3, 3, 3, 3});
  CHECK(sizes(RootType::B, 3) ==
        std::vector<std::size_t>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4});
  CHECK(sizes(RootType::C, 3) ==
        std::vector<std::size_t>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4});
  CHECK(sizes(RootType::G, 2) == std::vector<std::size_t>{6});
  CHECK(rank2_planes(build_root_system(RootType::D, 4)).size() == 34);
  CHECK(rank2_planes(build_root_system(RootType::F, 4)).size() == 122);
  CHECK(rank2_planes(build_root_system(RootType::A, 1)).size() == 1);

  // every positive root of A3 lies in exactly 3 of the 7 planes
  RootSystem rs = build_root_system(RootType::A, 3);
  std::vector<int> hits(rs.num_positive(), 0);
  for (const auto& g : rank2_planes(rs))
    for (std::size_t p : g) hits[p]++;
  for (int h : hits) CHECK(h == 3);
}

TEST_CASE("type string round trip and rejects") {
  for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E,
                 RootType::F, RootType::G})
    CHECK(root_type_from_string(root_type_to_string(t)) == t);
  CHECK_THROWS_AS(root_type_from_string("H"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(RootType::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(RootType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(RootType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(RootType::D, 2), std::invalid_argument);
}

TEST_CASE("dual coxeter probe is stable under the defining sum") {
  // (u,v) = (1/hvee) sum_{gamma>0} (gamma,u)(gamma,v) on a non-simple vector
  RootSystem rs = build_root_system(RootType::F, 4);
  Rat hv = dual_coxeter(rs);
  const RootCoords& u = rs.roots[rs.simple_indices[0]].v;
  const RootCoords& w = rs.roots[rs.simple_indices[2]].v;
  RootCoords v = add(u, w);
  Rat sum(0);
  for (std::size_t g = 0; g < rs.num_positive(); ++g) {
    const RootCoords& gamma = rs.positive_root(g).v;
    sum += rs.inner(gamma, v) * rs.inner(gamma, v);
  }
  CHECK(sum == hv * rs.inner(v, v));
}
