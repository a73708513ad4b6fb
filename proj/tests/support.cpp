#include "support.hpp"

#include <algorithm>
#include <set>

#include "toricreal/errors.hpp"

namespace oracle {

namespace {

// Row-reduces in place; returns the rank.
std::size_t eliminate(std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Halfspace normalized(RatVector normal, Rational offset) {
  Integer den = 1;
  for (const auto& x : normal) den = lcm(den, x.get_den());
  den = lcm(den, offset.get_den());
  IntVector n;
  for (const auto& x : normal) n.push_back(Integer(x * den));
  Integer g = 0;
  for (const auto& x : n) g = gcd(g, x);
  if (g == 0) return {n, offset};
  for (auto& x : n) x /= g;
  return {n, offset * den / g};
}

}  // namespace

std::optional<RatVector> solve_square(std::vector<RatVector> A, RatVector b) {
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) A[i].push_back(b[i]);
  if (eliminate(A) < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (A[i][i] == 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n] / A[i][i];
  return x;
}

int affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) return -1;
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(d);
  }
  return static_cast<int>(eliminate(diffs));
}

std::vector<RatVector> vertices(const std::vector<Halfspace>& hs, std::size_t d, const std::vector<Halfspace>& eqs) {
  std::set<RatVector> out;
  if (eqs.size() > d) return {};
  auto feasible = [&](const RatVector& x) {
    for (const auto& h : hs)
      if (h.evaluate(x) < 0) return false;
    for (const auto& e : eqs)
      if (e.evaluate(x) != 0) return false;
    return true;
  };
  for_each_subset(hs.size(), d - eqs.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> A;
    RatVector b;
    auto add = [&](const Halfspace& h) {
      A.push_back(toricreal::to_rational(h.normal));
      b.push_back(-h.offset);
    };
    for (const auto& e : eqs) add(e);
    for (auto i : idx) add(hs[i]);
    if (auto x = solve_square(A, b); x && feasible(*x)) out.insert(*x);
  });
  return {out.begin(), out.end()};
}

std::size_t facet_count(const std::vector<Halfspace>& hs, std::size_t d) {
  auto V = vertices(hs, d);
  std::set<std::vector<std::size_t>> tight_sets;
  for (const auto& h : hs) {
    std::vector<std::size_t> tight;
    std::vector<RatVector> pts;
    for (std::size_t v = 0; v < V.size(); ++v)
      if (h.evaluate(V[v]) == 0) {
        tight.push_back(v);
        pts.push_back(V[v]);
      }
    if (affine_rank(pts) == static_cast<int>(d) - 1) tight_sets.insert(tight);
  }
  return tight_sets.size();
}

std::vector<Halfspace> fourier_motzkin(const std::vector<Halfspace>& hs, std::size_t d, std::size_t j) {
  std::vector<Halfspace> pos, neg, out;
  auto drop = [&](const RatVector& n, const Rational& off) {
    RatVector m;
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) m.push_back(n[i]);
    Halfspace h = normalized(m, off);
    if (std::all_of(h.normal.begin(), h.normal.end(), [](const Integer& x) { return x == 0; })) return;
    out.push_back(h);
  };
  for (const auto& h : hs) {
    if (h.normal[j] > 0)
      pos.push_back(h);
    else if (h.normal[j] < 0)
      neg.push_back(h);
    else
      drop(toricreal::to_rational(h.normal), h.offset);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      Rational cp = Rational(-n.normal[j]), cn = Rational(p.normal[j]);
      RatVector m(d);
      for (std::size_t i = 0; i < d; ++i) m[i] = cp * p.normal[i] + cn * n.normal[i];
      drop(m, cp * p.offset + cn * n.offset);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Halfspace> hull_halfspaces(const std::vector<RatVector>& points, std::size_t d) {
  std::set<Halfspace> out;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    // Normal n with <n, p_i - p_0> = 0: fix one coordinate to 1 and solve.
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      RatVector v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = points[idx[i]][k] - points[idx[0]][k];
      diffs.push_back(v);
    }
    for (std::size_t fixed = 0; fixed < d; ++fixed) {
      std::vector<RatVector> A = diffs;
      RatVector b(diffs.size());
      RatVector row(d);
      row[fixed] = 1;
      A.push_back(row);
      b.push_back(1);
      auto n = solve_square(A, b);
      if (!n) continue;
      Rational off = 0;
      for (std::size_t k = 0; k < d; ++k) off -= (*n)[k] * points[idx[0]][k];
      bool ge = true, le = true;
      for (const auto& p : points) {
        Rational v = off;
        for (std::size_t k = 0; k < d; ++k) v += (*n)[k] * p[k];
        ge &= v >= 0;
        le &= v <= 0;
      }
      if (le && !ge) {
        for (auto& x : *n) x = -x;
        off = -off;
      }
      if (ge || le) out.insert(normalized(*n, off));
      break;
    }
  });
  return {out.begin(), out.end()};
}

}  // namespace oracle

namespace gen {

using namespace toricreal;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational rational(Rng& rng, int lo, int hi, int max_den) {
  Rational q(uniform(rng, lo * max_den, hi * max_den), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

std::vector<RatVector> points(Rng& rng, std::size_t dim, std::size_t count, int range) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    RatVector p(dim);
    for (auto& x : p) x = uniform(rng, -range, range);
    out.push_back(p);
  }
  return out;
}

Polytope polytope(Rng& rng, std::size_t dim) {
  while (true) {
    auto pts = points(rng, dim, dim + 1 + static_cast<std::size_t>(uniform(rng, 0, 4)), 3);
    if (oracle::affine_rank(pts) == static_cast<int>(dim)) return Polytope::from_vertices(pts, dim);
  }
}

namespace {

PolarizedVariety polarize(const Polytope& P) {
  PolarizedVariety out{from_normal_fan(P), {}};
  for (const auto& ray : out.X.rays())
    for (const auto& h : P.halfspaces())
      if (h.normal == ray) out.ample.push_back(h.offset);
  return out;
}

}  // namespace

PolarizedVariety polarized(Rng& rng, std::size_t dim) { return polarize(polytope(rng, dim)); }

PolarizedVariety simplicial_polarized(Rng& rng, std::size_t dim) {
  while (true) {
    std::vector<Halfspace> hs;
    const int count = static_cast<int>(dim) + 1 + uniform(rng, 0, 3);
    for (int i = 0; i < count; ++i) {
      IntVector n(dim);
      for (auto& x : n) x = uniform(rng, -3, 3);
      if (std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; })) continue;
      Integer g = content(n);
      for (auto& x : n) x /= g;
      hs.push_back({n, Rational(uniform(rng, 1, 6))});
    }
    try {
      Polytope P = Polytope::from_halfspaces(hs, dim);
      if (!P.is_full_dimensional()) continue;
      if (normal_fan(P).is_simplicial()) return polarize(P);
    } catch (const GeometryError&) {
    }
  }
}

}  // namespace gen

namespace fixtures {

using namespace toricreal;

namespace {

IntVector iv(std::initializer_list<int> xs) {
  IntVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

ToricVariety p2() { return ToricVariety(Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {0, 2}, {1, 2}})); }

ToricVariety p1xp1() {
  return ToricVariety(Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

ToricVariety hirzebruch(int a) {
  return ToricVariety(Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, a}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

ToricVariety batyrev33() {
  std::vector<PrimitiveRelation> rels;
  for (const char* r : {"v1 + v7 = 0", "v2 + v3 + v4 = v1", "v4 + v5 + v6 = 2v1", "v5 + v6 + v7 = v2 + v3",
                        "v1 + v2 + v3 = v5 + v6"})
    rels.push_back(parse_primitive_relation(r, 7));
  return from_primitive_relations(rels);
}

ToricVariety p2_bundle() { return projective_bundle(p2(), {iv({0, 0, 0}), iv({0, 0, 1}), iv({0, 0, 1})}); }

Polytope cremona() {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < 4; ++i) {
    IntVector e(4), f(4);
    e[i] = 1;
    f[i] = -1;
    hs.push_back({e, 0});
    hs.push_back({f, 3});
  }
  hs.push_back({iv({1, 1, 1, 1}), -1});
  hs.push_back({iv({-1, -1, -1, -1}), 11});
  return Polytope::from_halfspaces(hs, 4);
}

Divisor divisor(std::initializer_list<int> coefficients) {
  Divisor D;
  for (int c : coefficients) D.emplace_back(c);
  return D;
}

}  // namespace fixtures
