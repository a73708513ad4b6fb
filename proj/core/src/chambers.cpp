#include "toricreal/chambers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "toricreal/errors.hpp"
#include "toricreal/linalg.hpp"

namespace toricreal {

std::string to_string(WallType w) {
  switch (w) {
    case WallType::flip: return "flip";
    case WallType::divisorial_contraction: return "divisorial_contraction";
    case WallType::divisorial_extraction: return "divisorial_extraction";
  }
  return "unknown";
}

std::string describe(WallType w) {
  switch (w) {
    case WallType::flip: return "a flip";
    case WallType::divisorial_contraction: return "a divisorial contraction";
    case WallType::divisorial_extraction: return "a divisorial extraction";
  }
  return "unknown";
}

namespace {

std::vector<IntVector> ray_classes(const ToricVariety& X) {
  const IntegerMatrix& Q = X.class_group().free_part;
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < X.ray_count(); ++i) out.push_back(Q.col_vector(i));
  return out;
}

// Orients a hyperplane normal so that its first nonzero entry is positive.
IntVector oriented(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

}  // namespace

Cone effective_cone(const ToricVariety& X) {
  return Cone::from_generators(ray_classes(X), X.class_group().rank());
}

Cone movable_cone(const ToricVariety& X) {
  const auto classes = ray_classes(X);
  const std::size_t c = X.class_group().rank();
  Cone mov;
  bool first = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (j != i) others.push_back(classes[j]);
    Cone ci = Cone::from_generators(others, c);
    mov = first ? ci : mov.intersect(ci);
    first = false;
  }
  return mov;
}

Divisor divisor_with_class(const ToricVariety& X, const RatVector& cls) {
  auto sol = solve_rational(to_rational(X.class_group().free_part), cls);
  if (!sol) throw GeometryError(Errc::invalid_argument, "class is not in the span of the divisor classes");
  return *sol;
}

std::size_t ChamberDecomposition::movable_count() const {
  return static_cast<std::size_t>(
      std::count_if(chambers.begin(), chambers.end(), [](const Chamber& ch) { return ch.movable; }));
}

bool ChamberDecomposition::adjacent(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  return chambers[i].cone.intersect(chambers[j].cone).dim() + 1 == class_dim;
}

std::ptrdiff_t ChamberDecomposition::locate(const RatVector& cls) const {
  for (std::size_t i = 0; i < chambers.size(); ++i)
    if (chambers[i].cone.contains_in_relative_interior(cls)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

ChamberDecomposition secondary_fan(const ToricVariety& X) {
  if (!X.is_simplicial()) throw GeometryError(Errc::not_simplicial, "secondary fan requires a simplicial fan");
  if (!X.class_group().is_free())
    throw GeometryError(Errc::torsion_class_group, "class group has torsion");

  ChamberDecomposition cd;
  cd.class_dim = X.class_group().rank();
  cd.ray_classes = ray_classes(X);
  cd.effective = effective_cone(X);
  cd.movable = movable_cone(X);
  const std::size_t c = cd.class_dim;

  // Candidate walls: hyperplanes spanned by c-1 independent ray classes.
  std::vector<IntVector> walls;
  {
    const std::size_t k = cd.ray_classes.size();
    std::vector<bool> mask(k, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(k, c - 1)), true);
    do {
      std::vector<IntVector> subset;
      for (std::size_t i = 0; i < k; ++i)
        if (mask[i]) subset.push_back(cd.ray_classes[i]);
      if (rank(subset, c) + 1 != c) continue;
      auto ker = integer_kernel(IntegerMatrix::from_rows(subset, c));
      walls.push_back(oriented(primitive(ker.front())));
    } while (c > 1 && std::prev_permutation(mask.begin(), mask.end()));
    std::sort(walls.begin(), walls.end());
    walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  }

  std::vector<Cone> cells{cd.effective};
  for (const auto& h : walls) {
    std::vector<Cone> next;
    for (const auto& cell : cells) {
      bool pos = false, neg = false;
      for (const auto& r : cell.rays()) {
        int s = sgn(dot(h, r));
        pos |= s > 0;
        neg |= s < 0;
      }
      if (!(pos && neg)) {
        next.push_back(cell);
        continue;
      }
      IntVector minus_h = h;
      for (auto& x : minus_h) x = -x;
      for (const IntVector* side : {&h, static_cast<const IntVector*>(&minus_h)}) {
        std::vector<IntVector> ineqs = cell.facets();
        ineqs.push_back(*side);
        next.push_back(Cone::from_inequalities(ineqs, c));
      }
    }
    cells = std::move(next);
  }

  // Group cells by the normal fan of a sample divisor.
  std::map<std::vector<std::vector<IntVector>>, std::vector<IntVector>> groups;
  for (const auto& cell : cells) {
    Divisor D = divisor_with_class(X, to_rational(cell.interior_point()));
    Polytope P = moment_polytope(X, D);
    auto& gens = groups[normal_fan(P).cone_key()];
    gens.insert(gens.end(), cell.rays().begin(), cell.rays().end());
  }
  for (auto& [key, gens] : groups) {
    Chamber ch;
    ch.cone = Cone::from_generators(gens, c);
    ch.sample = divisor_with_class(X, to_rational(ch.cone.interior_point()));
    ch.movable = cd.movable.is_full_dimensional() &&
                 cd.movable.contains_in_relative_interior(to_rational(ch.cone.interior_point()));
    cd.chambers.push_back(std::move(ch));
  }
  std::sort(cd.chambers.begin(), cd.chambers.end(),
            [](const Chamber& a, const Chamber& b) { return a.cone.rays() < b.cone.rays(); });
  return cd;
}

bool same_chamber(const ToricVariety& X, const Divisor& A, const Divisor& B) {
  auto big_polytope = [&](const Divisor& D, const char* name) {
    try {
      Polytope P = moment_polytope(X, D);
      if (P.is_full_dimensional()) return P;
    } catch (const GeometryError& e) {
      if (e.code() != Errc::empty) throw;
    }
    throw GeometryError(Errc::not_big, std::string("divisor ") + name + " is not big");
  };
  Polytope PA = big_polytope(A, "A");
  Polytope PB = big_polytope(B, "B");
  Polytope S = minkowski_sum(PA, PB);
  return combinatorially_equivalent(S, PA) && combinatorially_equivalent(S, PB);
}

Divisor modify(const ToricVariety& X, const Divisor& A, std::uint64_t seed, std::size_t max_attempts) {
  if (!is_big(X, A)) throw GeometryError(Errc::not_big, "divisor is not big");
  std::mt19937_64 engine(seed);
  const std::uint64_t k = A.size();
  std::size_t attempts = 0;
  while (attempts < max_attempts) {
    const std::size_t index = static_cast<std::size_t>(engine() % k);
    const int direction = engine() % 2 == 0 ? 1 : -1;
    Rational step = 1;
    for (int s = 0; s < 10 && attempts < max_attempts; ++s, step /= 2) {
      ++attempts;
      Divisor B = A;
      B[index] += direction * step;
      try {
        if (same_chamber(X, A, B)) return B;
      } catch (const GeometryError& e) {
        if (e.code() != Errc::not_big) throw;
      }
    }
  }
  throw GeometryError(Errc::exhausted_attempts,
                      "no divisor in the same chamber found after " + std::to_string(max_attempts) + " attempts");
}

bool is_wall_crossing(const Polytope& PA, const Polytope& PB) {
  if (combinatorially_equivalent(PA, PB))
    throw GeometryError(Errc::same_chamber, "the polytopes are combinatorially equivalent");
  const std::size_t fa = PA.facet_count(), fb = PB.facet_count();
  const std::size_t fs = minkowski_sum(PA, PB).facet_count();
  return fs == std::min(fa, fb) + 1 && (fa > fb ? fa - fb : fb - fa) <= 1;
}

WallType classify_wall(const Polytope& PA, const Polytope& PB) {
  if (combinatorially_equivalent(PA, PB))
    throw GeometryError(Errc::same_chamber, "the polytopes are combinatorially equivalent");
  const std::size_t fa = PA.facet_count(), fb = PB.facet_count();
  if (fa == fb) return WallType::flip;
  return fb > fa ? WallType::divisorial_extraction : WallType::divisorial_contraction;
}

std::string chamber_report(const ToricVariety& X, const ChamberDecomposition& cd) {
  std::ostringstream out;
  out << "class group rank " << cd.class_dim << "\n";
  out << "ray classes\n";
  for (std::size_t i = 0; i < cd.ray_classes.size(); ++i) out << "  D" << i + 1 << " (" << join(cd.ray_classes[i]) << ")\n";
  out << "effective cone";
  for (const auto& r : cd.effective.rays()) out << " (" << join(r) << ")";
  out << "\nmovable cone";
  for (const auto& r : cd.movable.rays()) out << " (" << join(r) << ")";
  out << "\nchambers " << cd.chambers.size() << " (" << cd.movable_count() << " movable)\n";
  std::vector<Polytope> polys;
  for (std::size_t i = 0; i < cd.chambers.size(); ++i) {
    const auto& ch = cd.chambers[i];
    out << "  N" << i << (ch.movable ? " movable" : " not movable") << " generators";
    for (const auto& r : ch.cone.rays()) out << " (" << join(r) << ")";
    polys.push_back(moment_polytope(X, ch.sample));
    out << " facets " << polys.back().facet_count() << "\n";
  }
  out << "adjacency\n";
  for (std::size_t i = 0; i < cd.chambers.size(); ++i)
    for (std::size_t j = i + 1; j < cd.chambers.size(); ++j) {
      if (!cd.adjacent(i, j)) continue;
      out << "  N" << i << " -- N" << j << " " << to_string(classify_wall(polys[i], polys[j])) << "\n";
    }
  return out.str();
}

}  // namespace toricreal
