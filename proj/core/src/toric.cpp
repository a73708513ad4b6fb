#include "toricreal/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

#include "toricreal/errors.hpp"
#include "toricreal/linalg.hpp"

namespace toricreal {

ClassGroup compute_class_group(const std::vector<IntVector>& rays, std::size_t dim) {
  const std::size_t k = rays.size();
  IntegerMatrix P = IntegerMatrix::from_rows(rays, dim);
  SmithForm snf = smith_normal_form(P);
  ClassGroup cg;
  std::vector<IntVector> free_rows, torsion_rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (i < snf.rank) {
      if (snf.D(i, i) != 1) {
        cg.torsion.push_back(snf.D(i, i));
        torsion_rows.push_back(snf.U.row_vector(i));
      }
    } else {
      free_rows.push_back(snf.U.row_vector(i));
    }
  }
  IntegerMatrix Q = IntegerMatrix::from_rows(free_rows, k);
  cg.free_part = hermite_normal_form(Q).H;
  cg.torsion_part = IntegerMatrix::from_rows(torsion_rows, k);
  return cg;
}

ToricVariety::ToricVariety(Fan fan) : fan_(std::move(fan)) {
  complete_ = fan_.is_complete();
  simplicial_ = fan_.is_simplicial();
  smooth_ = simplicial_ && fan_.is_smooth();
  class_group_ = compute_class_group(fan_.rays(), fan_.dim());
}

namespace {

void check_length(const ToricVariety& X, const Divisor& D) {
  if (D.size() != X.ray_count())
    throw GeometryError(Errc::invalid_argument, "divisor has " + std::to_string(D.size()) + " coefficients, expected " +
                                                    std::to_string(X.ray_count()));
}

// Row-restriction of the ray matrix to a cone, and -b on the same rays.
template <class T>
std::pair<Matrix<T>, std::vector<T>> cone_system(const ToricVariety& X, const ConeIndices& cone,
                                                 const std::vector<T>& minus_b) {
  Matrix<T> A(cone.size(), X.dim());
  std::vector<T> rhs(cone.size());
  for (std::size_t r = 0; r < cone.size(); ++r) {
    for (std::size_t j = 0; j < X.dim(); ++j) A(r, j) = X.rays()[cone[r]][j];
    rhs[r] = minus_b[cone[r]];
  }
  return {std::move(A), std::move(rhs)};
}

}  // namespace

Polytope moment_polytope(const ToricVariety& X, const Divisor& D) {
  check_length(X, D);
  std::vector<Halfspace> hs;
  hs.reserve(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) hs.push_back({X.rays()[i], D[i]});
  return Polytope::from_halfspaces(hs, X.dim());
}

ToricVariety from_normal_fan(const Polytope& P) { return ToricVariety(normal_fan(P)); }

RatVector divisor_class(const ToricVariety& X, const Divisor& D) {
  check_length(X, D);
  return to_rational(X.class_group().free_part) * D;
}

bool linearly_equivalent(const ToricVariety& X, const Divisor& D, const Divisor& E) {
  check_length(X, D);
  check_length(X, E);
  Divisor diff(D.size());
  for (std::size_t i = 0; i < D.size(); ++i) diff[i] = D[i] - E[i];
  for (const auto& x : divisor_class(X, diff))
    if (x != 0) return false;
  if (!is_integral(diff)) return true;
  const ClassGroup& cg = X.class_group();
  IntVector t = cg.torsion_part * to_integer(diff);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] % cg.torsion[i] != 0) return false;
  return true;
}

bool is_cartier(const ToricVariety& X, const Divisor& D) {
  check_length(X, D);
  if (!is_integral(D)) return false;
  IntVector minus_b = to_integer(D);
  for (auto& x : minus_b) x = -x;
  for (const auto& cone : X.fan().cones()) {
    auto [A, rhs] = cone_system<Integer>(X, cone, minus_b);
    if (!solve_integer(A, rhs)) return false;
  }
  return true;
}

bool is_q_cartier(const ToricVariety& X, const Divisor& D) {
  check_length(X, D);
  Divisor minus_b = D;
  for (auto& x : minus_b) x = -x;
  for (const auto& cone : X.fan().cones()) {
    auto [A, rhs] = cone_system<Rational>(X, cone, minus_b);
    if (!solve_rational(A, rhs)) return false;
  }
  return true;
}

bool is_big(const ToricVariety& X, const Divisor& D) {
  try {
    return moment_polytope(X, D).is_full_dimensional();
  } catch (const GeometryError& e) {
    if (e.code() == Errc::empty) return false;
    throw;
  }
}

bool is_ample(const ToricVariety& X, const Divisor& D) {
  if (!is_q_cartier(X, D)) return false;
  Polytope P;
  try {
    P = moment_polytope(X, D);
  } catch (const GeometryError& e) {
    if (e.code() == Errc::empty) return false;
    throw;
  }
  if (!P.is_full_dimensional()) return false;
  return normal_fan(P).same_cones(X.fan());
}

Divisor anticanonical(const ToricVariety& X) { return Divisor(X.ray_count(), Rational(1)); }

bool is_fano(const ToricVariety& X) { return X.is_complete() && is_ample(X, anticanonical(X)); }

Divisor prime_divisor(const ToricVariety& X, std::size_t i, const Rational& coefficient) {
  if (i >= X.ray_count()) throw GeometryError(Errc::out_of_range, "no ray with index " + std::to_string(i));
  Divisor D(X.ray_count());
  D[i] = coefficient;
  return D;
}

std::vector<IntVector> proj_rays(const std::vector<IntVector>& rays, const std::vector<IntVector>& summands) {
  if (summands.empty()) throw GeometryError(Errc::invalid_argument, "projective bundle needs at least one summand");
  const std::size_t t = summands.size();
  for (const auto& row : summands)
    if (row.size() != rays.size())
      throw GeometryError(Errc::invalid_argument, "summand row length differs from the number of rays");
  const std::size_t n = rays.empty() ? 0 : rays.front().size();

  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    IntVector lifted = rays[i];
    for (std::size_t j = 1; j < t; ++j) lifted.push_back(summands[j][i] - summands[0][i]);
    out.push_back(std::move(lifted));
  }
  IntVector sum(n + t - 1);
  for (std::size_t j = 0; j + 1 < t; ++j) sum[n + j] = -1;
  out.push_back(std::move(sum));
  for (std::size_t j = 0; j + 1 < t; ++j) {
    IntVector e(n + t - 1);
    e[n + j] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

ToricVariety projective_bundle(const ToricVariety& X, const std::vector<IntVector>& summands) {
  std::vector<IntVector> rays = proj_rays(X.rays(), summands);
  const std::size_t k = X.ray_count();
  const std::size_t t = summands.size();
  std::vector<ConeIndices> cones;
  for (const auto& base : X.fan().cones())
    for (std::size_t omit = 0; omit < t; ++omit) {
      ConeIndices c = base;
      for (std::size_t f = 0; f < t; ++f)
        if (f != omit) c.push_back(k + f);
      cones.push_back(std::move(c));
    }

  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rays[a] < rays[b]; });
  std::vector<std::size_t> position(rays.size());
  std::vector<IntVector> sorted;
  for (std::size_t p = 0; p < order.size(); ++p) {
    position[order[p]] = p;
    sorted.push_back(rays[order[p]]);
  }
  for (auto& c : cones)
    for (auto& i : c) i = position[i];
  return ToricVariety(Fan(X.dim() + t - 1, std::move(sorted), std::move(cones)));
}

PrimitiveRelation parse_primitive_relation(const std::string& text, std::size_t ray_count) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw ParseError("relation must contain exactly one '=': " + text);

  std::map<std::size_t, Integer> lhs, rhs;
  static const std::regex term(R"(\s*([+-]?)\s*(\d*)\s*\*?\s*v(\d+)\s*|\s*([+-]?)\s*0\s*)");
  auto parse_side = [&](std::string side, std::map<std::size_t, Integer>& into) {
    std::size_t pos = 0;
    bool first = true;
    while (pos < side.size()) {
      std::smatch m;
      std::string rest = side.substr(pos);
      if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
        throw ParseError("cannot parse relation term in: " + text);
      std::string sign = m[3].matched ? m[1].str() : m[4].str();
      if (!first && sign.empty()) throw ParseError("missing '+' or '-' in relation: " + text);
      if (m[3].matched) {
        Integer c = m[2].length() == 0 ? Integer(1) : parse_integer(m[2].str());
        if (sign == "-") c = -c;
        std::size_t idx = std::stoul(m[3].str());
        if (idx == 0) throw ParseError("ray symbols are numbered from v1: " + text);
        into[idx - 1] += c;
      }
      pos += static_cast<std::size_t>(m.length(0));
      first = false;
    }
  };
  parse_side(text.substr(0, eq), lhs);
  parse_side(text.substr(eq + 1), rhs);

  std::size_t k = ray_count;
  for (const auto* side : {&lhs, &rhs})
    if (!side->empty()) k = std::max(k, side->rbegin()->first + 1);

  PrimitiveRelation rel;
  rel.coefficients.assign(k, 0);
  for (const auto& [i, c] : lhs) {
    rel.coefficients[i] += c;
    if (c > 0) rel.collection.push_back(i);
  }
  for (const auto& [i, c] : rhs) rel.coefficients[i] -= c;
  if (rel.collection.empty()) throw ParseError("relation has an empty primitive collection: " + text);
  return rel;
}

ToricVariety from_primitive_relations(const std::vector<PrimitiveRelation>& relations) {
  if (relations.empty()) throw GeometryError(Errc::inconsistent_relations, "no relations given");
  std::size_t k = 0;
  for (const auto& r : relations) k = std::max(k, r.coefficients.size());

  IntegerMatrix R(relations.size(), k);
  for (std::size_t i = 0; i < relations.size(); ++i)
    for (std::size_t j = 0; j < relations[i].coefficients.size(); ++j) R(i, j) = relations[i].coefficients[j];

  std::vector<IntVector> basis = integer_kernel(R);
  const std::size_t n = basis.size();
  if (n == 0) throw GeometryError(Errc::inconsistent_relations, "the relations admit no nonzero rays");
  // Kernel basis vectors are the columns of the k x n ray matrix.
  std::vector<IntVector> rays(k, IntVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) rays[i][j] = basis[j][i];
  for (std::size_t i = 0; i < k; ++i)
    if (!is_primitive(rays[i]) || content(rays[i]) == 0)
      throw GeometryError(Errc::inconsistent_relations, "ray v" + std::to_string(i + 1) + " is zero or not primitive");
  {
    auto sorted = rays;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GeometryError(Errc::inconsistent_relations, "the relations force two rays to coincide");
  }

  std::vector<ConeIndices> cones;
  ConeIndices pick(n);
  std::vector<bool> mask(k, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(n, k)), true);
  do {
    ConeIndices c;
    for (std::size_t i = 0; i < k; ++i)
      if (mask[i]) c.push_back(i);
    bool contains_collection = false;
    for (const auto& rel : relations)
      if (std::includes(c.begin(), c.end(), rel.collection.begin(), rel.collection.end())) {
        contains_collection = true;
        break;
      }
    if (contains_collection) continue;
    std::vector<IntVector> rs;
    for (auto i : c) rs.push_back(rays[i]);
    if (rank(rs, n) != n)
      throw GeometryError(Errc::inconsistent_relations, "a cone avoiding every primitive collection is degenerate");
    cones.push_back(std::move(c));
  } while (std::prev_permutation(mask.begin(), mask.end()));

  Fan fan(n, std::move(rays), std::move(cones));
  if (!fan.is_complete()) throw GeometryError(Errc::not_complete, "the fan defined by the relations is not complete");
  return ToricVariety(std::move(fan));
}

}  // namespace toricreal
