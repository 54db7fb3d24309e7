#include "ecl/constants.hpp"

#include <stdexcept>

namespace ecl {

namespace {

RootCoords coord_sum(const RootCoords& a, const RootCoords& b) {
  RootCoords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

Rat rank_norm(const RootSystem& rs) {
  if (rs.rank < 2)
    throw std::invalid_argument("constant requires rank >= 2");
  return Rat(rs.rank) * (rs.rank - 1);
}

}  // namespace

Rat tilde_c_general(const RootSystem& rs) {
  Rat total(0);
  for (const Root& a : rs.roots) {
    for (const Root& b : rs.roots) {
      RootCoords s = coord_sum(a.v, b.v);
      if (!rs.is_root(s)) continue;
      Rat aa = rs.length_sq(a.v);
      Rat bb = rs.length_sq(b.v);
      Rat ab = rs.inner(a.v, b.v);
      total += (Rat(1) - ab * ab / (aa * bb)) * (bb * bb + aa * aa) * rs.length_sq(s);
    }
  }
  return total / (4 * rank_norm(rs));
}

std::vector<PairClassEntry> pair_weight_table(const RootSystem& rs) {
  const Rat L(2);
  Rat s(1);  // squared short length where shorts exist
  if (rs.type == RootType::G) s = Rat(2, 3);
  std::vector<PairClassEntry> table;
  auto put = [&table](const Rat& a, const Rat& b, const Rat& ab, const Rat& w) {
    PairClassEntry e;
    e.len_a = a;
    e.len_b = b;
    e.len_ab = ab;
    e.weight = w;
    table.push_back(std::move(e));
  };
  switch (rs.type) {
    case RootType::A:
    case RootType::D:
    case RootType::E:
      put(L, L, L, Rat(12));
      break;
    case RootType::B:
      put(L, L, L, Rat(12));
      put(s, s, L, Rat(4));
      put(L, s, s, Rat(5, 2));
      put(s, L, s, Rat(5, 2));
      break;
    case RootType::C:
      // no long+long class: twice a long root is never a root here
      put(L, s, s, Rat(5, 2));
      put(s, L, s, Rat(5, 2));
      put(s, s, s, Rat(3, 2));
      put(s, s, L, Rat(4));
      break;
    case RootType::F:
      put(L, L, L, Rat(12));
      put(L, s, s, Rat(5, 2));
      put(s, L, s, Rat(5, 2));
      put(s, s, s, Rat(3, 2));
      put(s, s, L, Rat(4));
      break;
    case RootType::G:
      put(L, L, L, Rat(12));
      put(L, s, s, Rat(20, 27));
      put(s, L, s, Rat(20, 27));
      put(s, s, L, Rat(4, 3));
      put(s, s, s, Rat(4, 9));
      break;
  }
  return table;
}

Rat tilde_c_classified(const RootSystem& rs) {
  auto classes = classify_sum_pairs(rs);
  auto table = pair_weight_table(rs);
  Rat total(0);
  for (const auto& cls : classes) {
    bool found = false;
    for (const auto& e : table) {
      if (e.len_a == cls.len_a && e.len_b == cls.len_b && e.len_ab == cls.len_ab) {
        total += e.weight * cls.count;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("tilde_c_classified: pair class without a frozen weight");
  }
  return total / (4 * rank_norm(rs));
}

Rat tilde_c_bracket(const RootSystem& rs) {
  Rat total(0);
  for (const Root& a : rs.roots) {
    for (const Root& b : rs.roots) {
      if (!rs.is_root(coord_sum(a.v, b.v))) continue;
      Rat aa = rs.length_sq(a.v);
      Rat bb = rs.length_sq(b.v);
      Rat ab = rs.inner(a.v, b.v);
      RootString st = root_string(rs, a.v, b.v);
      total += (aa * bb - ab * ab) * aa * st.q * (st.r + 1) / 2;
    }
  }
  return total / rank_norm(rs);
}

ConstantReport constant_report(const RootSystem& rs) {
  ConstantReport rep;
  rep.type = rs.type;
  rep.rank = rs.rank;
  rep.tilde_c = tilde_c_general(rs);
  rep.tilde_c_classified = tilde_c_classified(rs);
  rep.tilde_c_bracket = tilde_c_bracket(rs);
  rep.c_over_lambda2 = rep.tilde_c / 4;
  auto classes = classify_sum_pairs(rs);
  auto table = pair_weight_table(rs);
  for (const auto& cls : classes) {
    PairClassEntry e;
    e.len_a = cls.len_a;
    e.len_b = cls.len_b;
    e.len_ab = cls.len_ab;
    e.count = cls.count;
    for (const auto& t : table)
      if (t.len_a == cls.len_a && t.len_b == cls.len_b && t.len_ab == cls.len_ab)
        e.weight = t.weight;
    rep.classes.push_back(std::move(e));
  }
  return rep;
}

}  // namespace ecl
