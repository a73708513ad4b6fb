#include "toricreal/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "toricreal/cone.hpp"
#include "toricreal/errors.hpp"
#include "toricreal/linalg.hpp"

namespace toricreal {

namespace {

// (offset, normal) scaled to an integer row of the homogenized cone.
IntVector homogenize(const Halfspace& h) {
  RatVector row;
  row.reserve(h.normal.size() + 1);
  row.push_back(h.offset);
  for (const auto& a : h.normal) row.emplace_back(a);
  bool zero = std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; });
  if (zero) return IntVector(row.size());
  return clear_denominators(row);
}

// Splits a homogenized functional (c0, c') into a halfspace with primitive c'.
Halfspace dehomogenize(const IntVector& f) {
  IntVector normal(f.begin() + 1, f.end());
  Integer g = content(normal);
  Halfspace h;
  h.normal = primitive(std::move(normal));
  h.offset = Rational(f[0], g);
  h.offset.canonicalize();
  return h;
}

}  // namespace

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& halfspaces, std::size_t ambient_dim) {
  std::vector<IntVector> rows;
  for (const auto& h : halfspaces) {
    if (h.normal.size() != ambient_dim) throw std::invalid_argument("halfspace dimension mismatch");
    rows.push_back(homogenize(h));
  }
  IntVector t(ambient_dim + 1);
  t[0] = 1;
  rows.push_back(std::move(t));

  dd::RaySet rs = dd::extreme_rays(rows, ambient_dim + 1);
  std::vector<RatVector> points;
  bool recession = !rs.lineality.empty();
  for (const auto& r : rs.rays) {
    if (r[0] == 0) {
      recession = true;
      continue;
    }
    RatVector p(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      p[i] = Rational(r[i + 1], r[0]);
      p[i].canonicalize();
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw GeometryError(Errc::empty, "the halfspaces have empty intersection");
  if (recession) throw GeometryError(Errc::unbounded, "the halfspaces define an unbounded polyhedron");
  return from_vertices(points, ambient_dim);
}

Polytope Polytope::from_vertices(const std::vector<RatVector>& points, std::size_t ambient_dim) {
  if (points.empty()) throw GeometryError(Errc::empty, "convex hull of no points");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw std::invalid_argument("point dimension mismatch");

  // Far points first: most of the remaining ones then fall inside the
  // partial hull and cost the double description step nothing.
  RatVector centroid(ambient_dim);
  for (const auto& p : points)
    for (std::size_t i = 0; i < ambient_dim; ++i) centroid[i] += p[i];
  for (auto& x : centroid) x /= static_cast<long>(points.size());
  std::vector<std::pair<Rational, std::size_t>> by_distance;
  for (std::size_t k = 0; k < points.size(); ++k) {
    Rational d2 = 0;
    for (std::size_t i = 0; i < ambient_dim; ++i) d2 += (points[k][i] - centroid[i]) * (points[k][i] - centroid[i]);
    by_distance.emplace_back(-d2, k);
  }
  std::sort(by_distance.begin(), by_distance.end());

  std::vector<IntVector> gens;
  for (const auto& [d2, k] : by_distance) {
    const RatVector& p = points[k];
    RatVector h;
    h.reserve(ambient_dim + 1);
    h.emplace_back(1);
    h.insert(h.end(), p.begin(), p.end());
    gens.push_back(clear_denominators(h));
  }
  Cone cone = Cone::from_generators(gens, ambient_dim + 1);

  Polytope P;
  P.ambient_dim_ = ambient_dim;
  for (const auto& r : cone.rays()) {
    RatVector v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      v[i] = Rational(r[i + 1], r[0]);
      v[i].canonicalize();
    }
    P.vertices_.push_back(std::move(v));
  }
  std::vector<RatVector> unsorted = P.vertices_;
  std::sort(P.vertices_.begin(), P.vertices_.end());

  for (const auto& e : cone.equations()) P.equations_.push_back(dehomogenize(e));
  std::sort(P.equations_.begin(), P.equations_.end());

  for (const auto& f : cone.facets()) {
    // The homogenizing inequality t >= 0 is a facet of the cone only over a point.
    if (std::all_of(f.begin() + 1, f.end(), [](const Integer& x) { return x == 0; })) continue;
    P.halfspaces_.push_back(dehomogenize(f));
  }
  std::sort(P.halfspaces_.begin(), P.halfspaces_.end());

  // Incidences from the integer cone data: the homogenized vertices in
  // sorted vertex order against the facets in sorted halfspace order.
  std::vector<std::pair<RatVector, const IntVector*>> ray_of;
  for (std::size_t r = 0; r < cone.rays().size(); ++r) ray_of.emplace_back(std::move(unsorted[r]), &cone.rays()[r]);
  std::sort(ray_of.begin(), ray_of.end());
  std::vector<std::pair<Halfspace, const IntVector*>> facet_of;
  for (const auto& f : cone.facets())
    if (!std::all_of(f.begin() + 1, f.end(), [](const Integer& x) { return x == 0; }))
      facet_of.emplace_back(dehomogenize(f), &f);
  std::sort(facet_of.begin(), facet_of.end());
  P.incidence_.assign(P.halfspaces_.size(), std::vector<bool>(P.vertices_.size()));
  for (std::size_t f = 0; f < facet_of.size(); ++f)
    for (std::size_t v = 0; v < ray_of.size(); ++v)
      P.incidence_[f][v] = dot(*facet_of[f].second, *ray_of[v].second) == 0;
  return P;
}

std::vector<std::size_t> Polytope::facets_through(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < halfspaces_.size(); ++f)
    if (incidence_[f][vertex]) out.push_back(f);
  return out;
}

std::vector<std::size_t> Polytope::vertices_on(std::size_t facet) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (incidence_[facet][v]) out.push_back(v);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t nv = vertices_.size();
  if (dim() == 0) return out;
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      bool edge = true;
      for (std::size_t k = 0; k < nv && edge; ++k) {
        if (k == i || k == j) continue;
        bool on_all = true;
        for (std::size_t f = 0; f < halfspaces_.size() && on_all; ++f)
          if (incidence_[f][i] && incidence_[f][j] && !incidence_[f][k]) on_all = false;
        if (on_all) edge = false;
      }
      if (edge) out.emplace_back(i, j);
    }
  return out;
}

bool Polytope::contains(const RatVector& m) const {
  if (m.size() != ambient_dim_) return false;
  for (const auto& e : equations_)
    if (e.evaluate(m) != 0) return false;
  for (const auto& h : halfspaces_)
    if (h.evaluate(m) < 0) return false;
  return true;
}

namespace {

// The vertices of a polytope over a common denominator, for fast exact
// minimization of linear functionals.
struct ScaledVertices {
  const Polytope* polytope;
  Integer denominator = 1;
  std::vector<IntVector> numerators;

  explicit ScaledVertices(const Polytope& R) : polytope(&R) {
    for (const auto& v : R.vertices()) denominator = lcm(denominator, lcm_of_denominators(v));
    for (const auto& v : R.vertices()) {
      IntVector n(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) n[i] = Rational(v[i] * denominator).get_num();
      numerators.push_back(std::move(n));
    }
  }

  // The vertex minimizing c (the first one on ties) and the minimum.
  std::pair<const RatVector*, Rational> minimize(const IntVector& c) const {
    std::size_t best = 0;
    Integer best_value = dot(c, numerators[0]);
    for (std::size_t w = 1; w < numerators.size(); ++w) {
      Integer value = dot(c, numerators[w]);
      if (value < best_value) {
        best = w;
        best_value = std::move(value);
      }
    }
    Rational m(best_value, denominator);
    m.canonicalize();
    return {&polytope->vertices()[best], std::move(m)};
  }
};

}  // namespace

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  const std::size_t d = P.ambient_dim();
  const ScaledVertices SP(P), SQ(Q);
  std::vector<RatVector> points;
  auto add_minimizer = [&](const IntVector& c) {
    auto [p, p_value] = SP.minimize(c);
    auto [q, q_value] = SQ.minimize(c);
    RatVector s = *p;
    for (std::size_t i = 0; i < d; ++i) s[i] += (*q)[i];
    points.push_back(std::move(s));
    return Rational(p_value + q_value);
  };

  // Start from the points of P + Q that minimize the facet normals through
  // each vertex of P and of Q, then add a minimizer for every inequality of
  // the partial hull that P + Q violates.
  for (const auto* R : {&P, &Q})
    for (std::size_t v = 0; v < R->vertex_count(); ++v) {
      IntVector c(d);
      for (std::size_t f : R->facets_through(v))
        for (std::size_t i = 0; i < d; ++i) c[i] += R->halfspaces()[f].normal[i];
      add_minimizer(c);
    }
  while (true) {
    Polytope hull = Polytope::from_vertices(points, d);
    points = hull.vertices();
    std::vector<Halfspace> rows = hull.halfspaces();
    for (const auto& e : hull.equations()) {
      rows.push_back(e);
      Halfspace neg = e;
      for (auto& x : neg.normal) x = -x;
      neg.offset = -neg.offset;
      rows.push_back(std::move(neg));
    }
    const std::size_t before = points.size();
    for (const auto& h : rows) {
      const std::size_t mark = points.size();
      if (add_minimizer(h.normal) + h.offset >= 0) points.resize(mark);
    }
    if (points.size() == before) return hull;
  }
}

Polytope slab(const Polytope& P, const IntVector& u, const Rational& a, const Rational& b) {
  if (u.size() != P.ambient_dim()) throw std::invalid_argument("slab: dimension mismatch");
  std::vector<Halfspace> hs = P.halfspaces();
  for (const auto& e : P.equations()) {
    hs.push_back(e);
    Halfspace neg = e;
    for (auto& x : neg.normal) x = -x;
    neg.offset = -neg.offset;
    hs.push_back(std::move(neg));
  }
  hs.push_back({u, -a});
  IntVector minus_u = u;
  for (auto& x : minus_u) x = -x;
  hs.push_back({std::move(minus_u), b});
  return Polytope::from_halfspaces(hs, P.ambient_dim());
}

Polytope project_out(const Polytope& P, std::size_t coordinate) {
  const std::size_t d = P.ambient_dim();
  if (coordinate >= d) throw std::out_of_range("project_out: coordinate out of range");
  std::vector<RatVector> pts;
  for (const auto& v : P.vertices()) {
    RatVector w;
    w.reserve(d - 1);
    for (std::size_t i = 0; i < d; ++i)
      if (i != coordinate) w.push_back(v[i]);
    pts.push_back(std::move(w));
  }
  return Polytope::from_vertices(pts, d - 1);
}

Polytope project_out(const Polytope& P, const IntVector& u) {
  const std::size_t d = P.ambient_dim();
  if (u.size() != d) throw std::invalid_argument("project_out: dimension mismatch");
  if (!is_primitive(u)) throw std::invalid_argument("project_out: direction must be primitive");
  std::size_t nonzero = 0, where = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (u[i] != 0) {
      ++nonzero;
      where = i;
    }
  if (nonzero == 1) return project_out(P, where);

  RationalMatrix W = to_rational(unimodular_completion(u));
  std::vector<RatVector> pts;
  for (const auto& v : P.vertices()) {
    RatVector w = W * v;
    w.pop_back();
    pts.push_back(std::move(w));
  }
  return Polytope::from_vertices(pts, d - 1);
}

Polytope scale(const Polytope& P, const Rational& factor) {
  if (factor <= 0) throw std::invalid_argument("scale: factor must be positive");
  std::vector<RatVector> pts = P.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return Polytope::from_vertices(pts, P.ambient_dim());
}

Integer lattice_scale_factor(const Polytope& P) {
  Integer l = 1;
  for (const auto& v : P.vertices()) {
    Integer d = lcm_of_denominators(v);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

bool is_lattice_polytope(const Polytope& P) { return lattice_scale_factor(P) == 1; }

Fan normal_fan(const Polytope& P) {
  if (!P.is_full_dimensional())
    throw GeometryError(Errc::lower_dimensional, "normal fan of a lower-dimensional polytope");
  std::vector<IntVector> rays;
  for (const auto& h : P.halfspaces()) rays.push_back(h.normal);
  std::vector<ConeIndices> cones;
  for (std::size_t v = 0; v < P.vertex_count(); ++v) cones.push_back(P.facets_through(v));
  return Fan(P.ambient_dim(), std::move(rays), std::move(cones));
}

bool combinatorially_equivalent(const Polytope& P, const Polytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim()) return false;
  if (P.vertex_count() != Q.vertex_count() || P.facet_count() != Q.facet_count()) return false;
  return normal_fan(P).same_cones(normal_fan(Q));
}

}  // namespace toricreal
