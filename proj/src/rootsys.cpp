#include "ecl/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ecl {

RootType root_type_from_string(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "E") return RootType::E;
  if (s == "F") return RootType::F;
  if (s == "G") return RootType::G;
  throw std::invalid_argument("unknown root system type: " + s);
}

std::string root_type_to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
  }
  return "?";
}

Rat RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += gram_diag[i] * Rat(a[i]) * Rat(b[i]);
  return s;
}

Rat RootSystem::pairing(const RootCoords& beta, const RootCoords& alpha) const {
  return Rat(2) * inner(beta, alpha) / inner(alpha, alpha);
}

bool RootSystem::is_root(const RootCoords& a) const {
  return lookup_.count(a) > 0;
}

long long RootSystem::find(const RootCoords& a) const {
  auto it = lookup_.find(a);
  return it == lookup_.end() ? -1 : it->second;
}

namespace {

RootCoords unit(int dim, int i, long long c) {
  RootCoords v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

RootCoords add(const RootCoords& a, const RootCoords& b, long long cb) {
  RootCoords r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += cb * b[i];
  return r;
}

// Reflection closure of the seed set; keeps coordinates integral.
std::set<RootCoords> weyl_closure(const std::vector<RootCoords>& simples,
                                  const std::vector<Rat>& gram) {
  auto inner = [&](const RootCoords& a, const RootCoords& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += gram[i] * Rat(a[i]) * Rat(b[i]);
    return s;
  };
  std::set<RootCoords> roots(simples.begin(), simples.end());
  for (const auto& s : simples) roots.insert(add(RootCoords(s.size(), 0), s, -1));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootCoords> cur(roots.begin(), roots.end());
    for (const auto& alpha : simples) {
      const Rat alen = inner(alpha, alpha);
      for (const auto& beta : cur) {
        Rat p = Rat(2) * inner(beta, alpha) / alen;
        if (denominator(p) != 1)
          throw std::logic_error("weyl_closure: non-integral pairing");
        const long long pi = static_cast<long long>(numerator(p));
        RootCoords img = add(beta, alpha, -pi);
        if (roots.insert(img).second) grew = true;
      }
    }
  }
  return roots;
}

}  // namespace

RootSystem build_root_system(RootType type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;

  std::vector<RootCoords> simples;
  std::set<RootCoords> all;

  switch (type) {
    case RootType::A: {
      const int n = rank + 1;
      rs.ambient_dim = n;
      rs.gram_diag.assign(static_cast<std::size_t>(n), Rat(1));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) all.insert(add(unit(n, i, 1), unit(n, j, 1), -1));
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(add(unit(n, i, 1), unit(n, i + 1, 1), -1));
      break;
    }
    case RootType::B: {
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      const int n = rank;
      rs.ambient_dim = n;
      rs.gram_diag.assign(static_cast<std::size_t>(n), Rat(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              all.insert(add(unit(n, i, si), unit(n, j, 1), sj));
      for (int i = 0; i < n; ++i) {
        all.insert(unit(n, i, 1));
        all.insert(unit(n, i, -1));
      }
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(add(unit(n, i, 1), unit(n, i + 1, 1), -1));
      simples.push_back(unit(n, n - 1, 1));
      break;
    }
    case RootType::C: {
      if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
      const int n = rank;
      rs.ambient_dim = n;
      rs.gram_diag.assign(static_cast<std::size_t>(n), Rat(1, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              all.insert(add(unit(n, i, si), unit(n, j, 1), sj));
      for (int i = 0; i < n; ++i) {
        all.insert(unit(n, i, 2));
        all.insert(unit(n, i, -2));
      }
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(add(unit(n, i, 1), unit(n, i + 1, 1), -1));
      simples.push_back(unit(n, n - 1, 2));
      break;
    }
    case RootType::D: {
      if (rank < 3) throw std::invalid_argument("D requires rank >= 3");
      const int n = rank;
      rs.ambient_dim = n;
      rs.gram_diag.assign(static_cast<std::size_t>(n), Rat(1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              all.insert(add(unit(n, i, si), unit(n, j, 1), sj));
      for (int i = 0; i + 1 < n; ++i)
        simples.push_back(add(unit(n, i, 1), unit(n, i + 1, 1), -1));
      simples.push_back(add(unit(n, n - 2, 1), unit(n, n - 1, 1), 1));
      break;
    }
    case RootType::G: {
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      rs.ambient_dim = 3;
      rs.gram_diag.assign(3, Rat(1, 3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) all.insert(add(unit(3, i, 1), unit(3, j, 1), -1));
      const std::array<std::array<long long, 3>, 3> longs = {
          {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}};
      for (const auto& l : longs) {
        all.insert(RootCoords(l.begin(), l.end()));
        all.insert(RootCoords{-l[0], -l[1], -l[2]});
      }
      simples.push_back(add(unit(3, 0, 1), unit(3, 1, 1), -1));  // short
      simples.push_back(RootCoords{-2, 1, 1});                   // long
      break;
    }
    case RootType::F: {
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      rs.ambient_dim = 4;
      rs.gram_diag.assign(4, Rat(1, 4));
      for (int i = 0; i < 4; ++i) {
        all.insert(unit(4, i, 2));
        all.insert(unit(4, i, -2));
      }
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {2, -2})
            for (int sj : {2, -2})
              all.insert(add(unit(4, i, si), unit(4, j, 1), sj));
      for (int s0 : {1, -1})
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1})
              all.insert(RootCoords{s0, s1, s2, s3});
      simples.push_back(add(unit(4, 1, 2), unit(4, 2, 1), -2));  // e2 - e3
      simples.push_back(add(unit(4, 2, 2), unit(4, 3, 1), -2));  // e3 - e4
      simples.push_back(unit(4, 3, 2));                          // e4
      simples.push_back(RootCoords{1, -1, -1, -1});  // (e1-e2-e3-e4)/2
      break;
    }
    case RootType::E: {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank 6..8");
      rs.ambient_dim = 8;
      rs.gram_diag.assign(8, Rat(1, 4));
      std::vector<RootCoords> e8 = {
          {1, -1, -1, -1, -1, -1, -1, 1},  // (e1+e8-e2-...-e7)/2
          {2, 2, 0, 0, 0, 0, 0, 0},        // e1+e2
          {-2, 2, 0, 0, 0, 0, 0, 0},       // e2-e1
          {0, -2, 2, 0, 0, 0, 0, 0},       // e3-e2
          {0, 0, -2, 2, 0, 0, 0, 0},       // e4-e3
          {0, 0, 0, -2, 2, 0, 0, 0},       // e5-e4
          {0, 0, 0, 0, -2, 2, 0, 0},       // e6-e5
          {0, 0, 0, 0, 0, -2, 2, 0},       // e7-e6
      };
      simples.assign(e8.begin(), e8.begin() + rank);
      all = weyl_closure(simples, rs.gram_diag);
      break;
    }
  }

  if (all.empty()) all = weyl_closure(simples, rs.gram_diag);

  // Canonical order is lexicographic on coordinates.
  rs.roots.clear();
  for (const auto& v : all) {
    Root r;
    r.v = v;
    rs.roots.push_back(std::move(r));
  }
  std::sort(rs.roots.begin(), rs.roots.end(),
            [](const Root& a, const Root& b) { return a.v < b.v; });
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    rs.roots[i].index = static_cast<long long>(i);
    rs.lookup_[rs.roots[i].v] = static_cast<long long>(i);
  }
  rs.simple_indices.clear();
  for (const auto& s : simples) {
    long long idx = rs.find(s);
    if (idx < 0) throw std::logic_error("simple root missing from system");
    rs.simple_indices.push_back(static_cast<int>(idx));
  }

  // Orientation: expand over the simple roots; positivity = nonnegative
  // expansion.  Also validates that the simples span every root.
  {
    const std::size_t m = simples.size();
    const std::size_t d = static_cast<std::size_t>(rs.ambient_dim);
    for (auto& root : rs.roots) {
      MatQ sys = matq_zero(d, m + 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j)
          sys[i][j] = Rat(simples[j][i]);
        sys[i][m] = Rat(root.v[i]);
      }
      std::vector<std::size_t> piv = matq_rref(sys);
      if (!piv.empty() && piv.back() == m)
        throw std::logic_error("root outside simple-root span");
      // Back-substitute: rref leaves solution rows for pivot columns.
      std::vector<Rat> coef(m, Rat(0));
      for (std::size_t pr = 0; pr < piv.size(); ++pr) coef[piv[pr]] = sys[pr][m];
      bool nonneg = true, nonpos = true;
      for (const Rat& c : coef) {
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
      }
      if (nonneg == nonpos)
        throw std::logic_error("mixed-sign simple-root expansion");
      root.positive = nonneg;
    }
  }
  for (const auto& r : rs.roots)
    if (r.positive) rs.positive_indices.push_back(r.index);
  if (2 * rs.positive_indices.size() != rs.roots.size())
    throw std::logic_error("positive roots are not half of all roots");
  return rs;
}

Rat dual_coxeter(const RootSystem& rs) {
  // (u, v) = (1/h) sum_{gamma > 0} (gamma, u)(gamma, v), probed on all pairs
  // of simple roots.
  std::optional<Rat> h;
  const std::size_t m = rs.simple_indices.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const RootCoords& u = rs.roots[static_cast<std::size_t>(rs.simple_indices[i])].v;
      const RootCoords& v = rs.roots[static_cast<std::size_t>(rs.simple_indices[j])].v;
      Rat lhs = rs.inner(u, v);
      Rat sum = 0;
      for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        const RootCoords& g = rs.positive_root(k).v;
        sum += rs.inner(g, u) * rs.inner(g, v);
      }
      if (lhs == 0) {
        continue;  // degenerate probe: any h fits
      }
      Rat probe = sum / lhs;
      if (h && *h != probe)
        throw std::logic_error("dual_coxeter: probe mismatch");
      h = probe;
    }
  }
  if (!h) throw std::logic_error("dual_coxeter: no usable probe");
  return *h;
}

RootString root_string(const RootSystem& rs, const RootCoords& alpha,
                       const RootCoords& beta) {
  if (!rs.is_root(alpha) || !rs.is_root(beta))
    throw std::invalid_argument("root_string: arguments must be roots");
  RootCoords neg = alpha;
  for (auto& c : neg) c = -c;
  if (beta == alpha || beta == neg)
    throw std::invalid_argument("root_string: string through +-alpha undefined");
  RootString s;
  RootCoords cur = add(beta, alpha, -1);
  while (rs.is_root(cur)) {
    ++s.r;
    cur = add(cur, alpha, -1);
  }
  cur = add(beta, alpha, 1);
  while (rs.is_root(cur)) {
    ++s.q;
    cur = add(cur, alpha, 1);
  }
  return s;
}

RootCoords reflect(const RootSystem& rs, const RootCoords& alpha,
                   const RootCoords& beta) {
  Rat p = rs.pairing(beta, alpha);
  if (denominator(p) != 1) throw std::logic_error("reflect: non-integral pairing");
  return add(beta, alpha, -static_cast<long long>(numerator(p)));
}

std::vector<SumPairClass> classify_sum_pairs(const RootSystem& rs) {
  std::map<std::array<Rat, 3>, long long> counts;
  const std::size_t n = rs.roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RootCoords sum = add(rs.roots[i].v, rs.roots[j].v, 1);
      if (!rs.is_root(sum)) continue;
      std::array<Rat, 3> key = {rs.length_sq(rs.roots[i].v),
                                rs.length_sq(rs.roots[j].v),
                                rs.length_sq(sum)};
      ++counts[key];
    }
  }
  std::vector<SumPairClass> out;
  for (const auto& [key, c] : counts) {
    SumPairClass k;
    k.len_a = key[0];
    k.len_b = key[1];
    k.len_ab = key[2];
    k.count = c;
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<std::vector<std::size_t>> rank2_planes(const RootSystem& rs) {
  const std::size_t np = rs.num_positive();
  if (np < 2) {
    std::vector<std::size_t> all(np);
    for (std::size_t i = 0; i < np; ++i) all[i] = i;
    return {all};
  }
  // The plane of a pair is keyed by the rref of the 2 x dim coordinate matrix;
  // every generating pair inside one plane reduces to the same key, so the
  // union of pair members recovers the full plane.
  std::map<std::vector<Rat>, std::set<std::size_t>> planes;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = i + 1; j < np; ++j) {
      MatQ m(2, std::vector<Rat>(rs.ambient_dim));
      for (int c = 0; c < rs.ambient_dim; ++c) {
        m[0][c] = Rat(rs.positive_root(i).v[c]);
        m[1][c] = Rat(rs.positive_root(j).v[c]);
      }
      matq_rref(m);
      std::vector<Rat> key;
      key.reserve(2 * rs.ambient_dim);
      for (const auto& row : m)
        for (const auto& e : row) key.push_back(e);
      auto& members = planes[std::move(key)];
      members.insert(i);
      members.insert(j);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(planes.size());
  for (const auto& [key, members] : planes)
    out.emplace_back(members.begin(), members.end());
  return out;
}

}  // namespace ecl
