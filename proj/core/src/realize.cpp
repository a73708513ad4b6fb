#include "toricreal/realize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "toricreal/chambers.hpp"
#include "toricreal/cstar.hpp"
#include "toricreal/errors.hpp"

namespace toricreal {

namespace {

Divisor pullback(const Divisor& D) {
  Divisor out = D;
  out.emplace_back(0);
  out.emplace_back(0);
  return out;
}

// The action's weights are made integral; other coordinates may stay fractional.
Realization scaled(Polytope P, std::vector<IntVector> rays, Divisor D) {
  Realization G;
  G.scale = lcm_of_denominators(weights(P, last_coordinate(P.ambient_dim())));
  G.polytope = G.scale == 1 ? std::move(P) : scale(P, Rational(G.scale));
  G.u = last_coordinate(G.polytope.ambient_dim());
  G.provenance.bundle_rays = std::move(rays);
  G.provenance.bundle_divisor = std::move(D);
  return G;
}

Polytope bundle_polytope(const std::vector<IntVector>& rays, const Divisor& D) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < rays.size(); ++i) hs.push_back({rays[i], D[i]});
  return Polytope::from_halfspaces(hs, rays.front().size());
}

}  // namespace

Realization geometric_realization(const ToricVariety& Y, const Divisor& A, const Divisor& B, const Integer& ell) {
  const std::size_t k = Y.ray_count();
  if (A.size() != k || B.size() != k) throw GeometryError(Errc::invalid_argument, "divisor length mismatch");
  if (ell <= 0) throw GeometryError(Errc::invalid_argument, "ell must be positive");
  if (!is_big(Y, A)) throw GeometryError(Errc::not_big, "A is not big");
  // B may sit on the boundary of the effective cone; it only has to be effective.
  moment_polytope(Y, B);

  Divisor H(k);
  for (std::size_t i = 0; i < k; ++i) H[i] = (B[i] - A[i]) / Rational(ell);
  if (!is_cartier(Y, H)) throw GeometryError(Errc::not_cartier, "(B - A) / ell is not Cartier");

  std::vector<IntVector> rays = proj_rays(Y.rays(), {IntVector(k), to_integer(H)});
  const std::size_t n = rays.size();
  Divisor D = pullback(A);
  D[n - 2] += Rational(ell);

  Realization G = scaled(bundle_polytope(rays, D), rays, D);
  G.provenance.A = A;
  G.provenance.B = B;
  G.provenance.ell = ell;
  return G;
}

bool is_sharp(const Polytope& P, const IntVector& u) {
  if (criticality(P, u) <= 1) return true;
  auto Q = geometric_quotients(P, u);
  for (std::size_t i = 0; i + 1 < Q.size(); ++i) {
    if (combinatorially_equivalent(Q[i], Q[i + 1])) return false;
    if (!is_wall_crossing(Q[i], Q[i + 1])) return false;
  }
  return true;
}

bool is_sharp(const Realization& G) { return is_sharp(G.polytope, G.u); }

Realization sharp_realization(const ToricVariety& Y, const Divisor& A, const Divisor& B, std::uint64_t seed,
                              std::size_t max_modifications) {
  Divisor current = A;
  for (std::size_t n = 0; n <= max_modifications; ++n) {
    if (n > 0) current = modify(Y, current, seed + (n - 1));
    // With ell = 1 the difference must be integral; rescale both divisors.
    RatVector both = current;
    both.insert(both.end(), B.begin(), B.end());
    Integer common = lcm_of_denominators(both);
    Divisor a = current, b = B;
    for (auto& x : a) x *= common;
    for (auto& x : b) x *= common;
    Realization G = geometric_realization(Y, a, b, 1);
    if (is_sharp(G)) {
      G.provenance.seed = seed;
      G.provenance.modifications = n;
      return G;
    }
  }
  throw GeometryError(Errc::exhausted_attempts, "no sharp realization after " + std::to_string(max_modifications) +
                                                    " modifications");
}

Realization unpruning(const ToricVariety& Y, const Divisor& E, const Divisor& F, const Integer& a, const Integer& b) {
  const std::size_t k = Y.ray_count();
  if (E.size() != k || F.size() != k) throw GeometryError(Errc::invalid_argument, "divisor length mismatch");
  if (a < 0 || b < 0) throw GeometryError(Errc::invalid_argument, "a and b must be nonnegative");
  if (!is_integral(E) || !is_integral(F))
    throw GeometryError(Errc::not_cartier, "unpruning needs integral divisors E and F");

  std::vector<IntVector> rays = proj_rays(Y.rays(), {to_integer(E), to_integer(F)});
  const std::size_t n = rays.size();
  Divisor D = pullback(E);
  D[n - 2] += 1 + Rational(a);
  D[n - 1] += Rational(b);

  Realization G = scaled(bundle_polytope(rays, D), rays, D);
  G.provenance.A = E;
  G.provenance.B = F;
  return G;
}

Integer compute_m(const ToricVariety& Y, const Divisor& H, AmpleConvention convention, const Integer& cap) {
  if (H.size() != Y.ray_count()) throw GeometryError(Errc::invalid_argument, "divisor length mismatch");
  if (!is_fano(Y)) throw GeometryError(Errc::not_fano, "the variety is not Fano");
  const int sign = convention == AmpleConvention::code ? 1 : -1;
  for (Integer m = 1; m <= cap; ++m) {
    Divisor D(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) D[i] = Rational(m) + sign * H[i];
    if (is_ample(Y, D)) return m;
  }
  throw GeometryError(Errc::no_such_m, "no m up to " + to_string(cap) + " makes the divisor ample");
}

Realization fano_realization(const ToricVariety& Y, const Divisor& H, AmpleConvention convention) {
  Integer m = compute_m(Y, H, convention);
  const std::size_t k = Y.ray_count();
  Divisor E(k), F(k);
  for (std::size_t i = 0; i < k; ++i) {
    E[i] = Rational(m) - H[i];
    F[i] = Rational(m);
  }
  Realization G = unpruning(Y, E, F, m - 1, m);
  G.provenance.m = m;
  return G;
}

std::string render_provenance(const Realization& G) {
  const Provenance& p = G.provenance;
  std::ostringstream out;
  out << "A " << join(p.A) << "\n";
  out << "B " << join(p.B) << "\n";
  out << "ell " << to_string(p.ell) << "\n";
  out << "bundle_divisor " << join(p.bundle_divisor) << "\n";
  out << "scale " << to_string(G.scale) << "\n";
  if (p.seed) out << "seed " << *p.seed << "\n";
  out << "modifications " << p.modifications << "\n";
  if (p.m) out << "m " << to_string(*p.m) << "\n";
  return out.str();
}

std::string render_structured(const Realization& G, const ActionReport& report) {
  using nlohmann::json;
  const Provenance& p = G.provenance;
  auto strings = [](const auto& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
  };
  json rays = json::array();
  for (const auto& r : p.bundle_rays) rays.push_back(strings(r));
  json prov = {{"A", strings(p.A)},
               {"B", strings(p.B)},
               {"ell", to_string(p.ell)},
               {"bundle_rays", rays},
               {"bundle_divisor", strings(p.bundle_divisor)},
               {"scale", to_string(G.scale)},
               {"modifications", p.modifications}};
  prov["seed"] = p.seed ? json(*p.seed) : json(nullptr);
  prov["m"] = p.m ? json(to_string(*p.m)) : json(nullptr);
  json j;
  j["schema"] = "toricreal.realization";
  j["version"] = 1;
  j["provenance"] = prov;
  j["functional"] = strings(G.u);
  j["lattice_polytope"] = is_lattice_polytope(G.polytope);
  j["report"] = json::parse(render_structured(report));
  return j.dump(2) + "\n";
}

}  // namespace toricreal
