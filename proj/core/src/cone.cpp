#include "toricreal/cone.hpp"

#include <algorithm>
#include <set>
#include <bit>
#include <cstdint>

#include "toricreal/errors.hpp"
#include "toricreal/linalg.hpp"

namespace toricreal {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

int sign(const Integer& x) { return sgn(x); }

}  // namespace

namespace dd {

RaySet extreme_rays(const std::vector<IntVector>& inequalities, std::size_t dim) {
  RaySet out;
  if (dim == 0) return out;

  std::vector<IntVector> rows;
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw std::invalid_argument("extreme_rays: row length mismatch");
    bool zero = std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
    if (!zero) rows.push_back(primitive(a));
  }

  // Lineality space = kernel of the row matrix.
  {
    RationalMatrix A(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) A(i, j) = rows[i][j];
    for (const auto& v : rational_kernel(A)) out.lineality.push_back(clear_denominators(v));
  }
  if (out.lineality.size() == dim) return out;
  for (const auto& l : out.lineality) {
    rows.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    rows.push_back(std::move(neg));
  }

  // Greedy choice of dim independent rows.
  std::vector<std::size_t> order;
  std::vector<std::size_t> basis;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < rows.size() && basis.size() < dim; ++i) {
      chosen.push_back(rows[i]);
      if (rank(chosen, dim) == chosen.size())
        basis.push_back(i);
      else
        chosen.pop_back();
    }
  }
  order = basis;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (std::find(basis.begin(), basis.end(), i) == basis.end()) order.push_back(i);

  const std::size_t nrows = rows.size();
  std::vector<IntVector> rays;
  std::vector<Bitset> zeros;
  {
    RationalMatrix B(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) B(i, j) = rows[basis[i]][j];
    RationalMatrix Binv = *inverse(B);
    for (std::size_t j = 0; j < dim; ++j) {
      RatVector col(dim);
      for (std::size_t i = 0; i < dim; ++i) col[i] = Binv(i, j);
      rays.push_back(clear_denominators(col));
      Bitset z(nrows);
      for (std::size_t i = 0; i < dim; ++i)
        if (i != j) z.set(basis[i]);
      zeros.push_back(std::move(z));
    }
  }

  for (std::size_t step = dim; step < order.size(); ++step) {
    const std::size_t ri = order[step];
    const IntVector& a = rows[ri];
    std::vector<Integer> values(rays.size());
    std::vector<std::size_t> pos, neg, zer;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = dot(a, rays[r]);
      switch (sign(values[r])) {
        case 1: pos.push_back(r); break;
        case -1: neg.push_back(r); break;
        default: zer.push_back(r); break;
      }
    }
    if (neg.empty()) {
      for (auto r : zer) zeros[r].set(ri);
      continue;
    }

    std::vector<IntVector> next_rays;
    std::vector<Bitset> next_zeros;
    for (auto r : pos) {
      next_rays.push_back(rays[r]);
      next_zeros.push_back(zeros[r]);
    }
    for (auto r : zer) {
      next_rays.push_back(rays[r]);
      Bitset z = zeros[r];
      z.set(ri);
      next_zeros.push_back(std::move(z));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        Bitset common = zeros[p] & zeros[n];
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q == p || q == n) continue;
          if (common.subset_of(zeros[q])) adjacent = false;
        }
        if (!adjacent) continue;
        // values[p] > 0 > values[n]; the combination is tight on row ri.
        IntVector combo(dim);
        for (std::size_t j = 0; j < dim; ++j) combo[j] = values[p] * rays[n][j] - values[n] * rays[p][j];
        next_rays.push_back(primitive(std::move(combo)));
        common.set(ri);
        next_zeros.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    zeros = std::move(next_zeros);
  }

  out.rays = std::move(rays);
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace dd

Cone Cone::from_generators(const std::vector<IntVector>& generators, std::size_t ambient_dim) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  // Deduplicated in input order, which the double description step follows.
  std::vector<IntVector> gens;
  std::set<IntVector> seen;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("Cone: generator dimension mismatch");
    if (content(g) == 0) continue;
    IntVector p = primitive(g);
    if (seen.insert(p).second) gens.push_back(std::move(p));
  }

  // A maximal independent subset of the generators in echelon form gives
  // the linear span: its kernel and its pivot columns.
  std::vector<RatVector> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> canonical;
  for (const auto& g : gens) {
    if (echelon.size() == ambient_dim) break;
    RatVector v(g.begin(), g.end());
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if (v[pivots[i]] == 0) continue;
      const Rational f = v[pivots[i]];
      for (std::size_t j = 0; j < ambient_dim; ++j) v[j] -= f * echelon[i][j];
    }
    std::size_t p = 0;
    while (p < ambient_dim && v[p] == 0) ++p;
    if (p == ambient_dim) continue;
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    echelon.push_back(std::move(v));
    pivots.push_back(p);
  }
  {
    RationalMatrix G(echelon.size(), ambient_dim);
    for (std::size_t i = 0; i < echelon.size(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) G(i, j) = echelon[i][j];
    for (const auto& v : rational_kernel(G)) c.equations_.push_back(clear_denominators(v));
    std::sort(c.equations_.begin(), c.equations_.end());
    rref(G, &canonical);
  }
  if (gens.empty()) return c;
  pivots = std::move(canonical);
  const std::size_t k = pivots.size();

  std::vector<IntVector> projected;
  for (const auto& g : gens) {
    IntVector p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = g[pivots[i]];
    projected.push_back(std::move(p));
  }
  dd::RaySet dual = dd::extreme_rays(projected, k);
  if (!dual.lineality.empty() || rank(dual.rays, k) < k)
    throw GeometryError(Errc::invalid_argument, "cone is not pointed");

  for (const auto& f : dual.rays) {
    IntVector lifted(ambient_dim);
    for (std::size_t i = 0; i < k; ++i) lifted[pivots[i]] = f[i];
    c.facets_.push_back(primitive(std::move(lifted)));
  }
  std::sort(c.facets_.begin(), c.facets_.end());

  // A generator spans an extreme ray exactly when no other generator lies on
  // every facet through it.
  std::vector<Bitset> tight;
  for (const auto& g : gens) {
    Bitset t(c.facets_.size());
    for (std::size_t f = 0; f < c.facets_.size(); ++f)
      if (sgn(dot(c.facets_[f], g)) == 0) t.set(f);
    tight.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool extreme = k > 0;
    for (std::size_t j = 0; j < gens.size() && extreme; ++j)
      if (j != i && tight[i].subset_of(tight[j])) extreme = false;
    if (extreme) c.rays_.push_back(gens[i]);
  }
  std::sort(c.rays_.begin(), c.rays_.end());
  return c;
}

Cone Cone::from_generators(const std::vector<RatVector>& generators, std::size_t ambient_dim) {
  std::vector<IntVector> ints;
  for (const auto& g : generators) {
    bool zero = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; });
    if (!zero) ints.push_back(clear_denominators(g));
  }
  return from_generators(ints, ambient_dim);
}

Cone Cone::from_inequalities(const std::vector<IntVector>& inequalities, std::size_t ambient_dim) {
  dd::RaySet rs = dd::extreme_rays(inequalities, ambient_dim);
  if (!rs.lineality.empty()) throw GeometryError(Errc::invalid_argument, "cone has a lineality space");
  return from_generators(rs.rays, ambient_dim);
}

bool Cone::contains(const RatVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const RatVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) <= 0) return false;
  return true;
}

IntVector Cone::interior_point() const {
  IntVector p(ambient_dim_);
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += r[i];
  return p;
}

Cone Cone::intersect(const Cone& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Cone::intersect: dimension mismatch");
  std::vector<IntVector> rows = facets_;
  rows.insert(rows.end(), other.facets_.begin(), other.facets_.end());
  for (const auto* eqs : {&equations_, &other.equations_})
    for (const auto& e : *eqs) {
      rows.push_back(e);
      IntVector neg = e;
      for (auto& x : neg) x = -x;
      rows.push_back(std::move(neg));
    }
  return from_inequalities(rows, ambient_dim_);
}

std::vector<std::size_t> Cone::rays_on_facet(std::size_t f) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rays_.size(); ++r)
    if (dot(facets_[f], rays_[r]) == 0) out.push_back(r);
  return out;
}

}  // namespace toricreal
