#include "toricreal/cstar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toricreal/errors.hpp"
#include "toricreal/toric.hpp"

namespace toricreal {

IntVector coordinate_functional(std::size_t dim, std::size_t j) {
  if (j >= dim) throw GeometryError(Errc::out_of_range, "coordinate index out of range");
  IntVector u(dim);
  u[j] = 1;
  return u;
}

IntVector last_coordinate(std::size_t dim) { return coordinate_functional(dim, dim - 1); }

namespace {

void check_functional(const Polytope& P, const IntVector& u) {
  if (u.size() != P.ambient_dim()) throw GeometryError(Errc::invalid_argument, "functional has the wrong length");
  if (content(u) == 0 || !is_primitive(u))
    throw GeometryError(Errc::invalid_argument, "functional must be primitive and nonzero");
}

}  // namespace

std::vector<Rational> weights(const Polytope& P, const IntVector& u) {
  check_functional(P, u);
  std::vector<Rational> w;
  for (const auto& v : P.vertices()) w.push_back(dot(u, v));
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

std::vector<FixedComponent> fixed_components(const Polytope& P, const IntVector& u) {
  check_functional(P, u);
  const std::size_t nv = P.vertex_count();
  std::vector<Rational> value(nv);
  for (std::size_t v = 0; v < nv; ++v) value[v] = dot(u, P.vertices()[v]);

  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : P.edges())
    if (value[a] == value[b]) parent[find(a)] = find(b);

  std::map<std::size_t, FixedComponent> by_root;
  for (std::size_t v = 0; v < nv; ++v) {
    auto& comp = by_root[find(v)];
    comp.weight = value[v];
    comp.vertices.push_back(v);
  }
  std::vector<FixedComponent> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  std::sort(out.begin(), out.end(), [](const FixedComponent& a, const FixedComponent& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.vertices.front() < b.vertices.front();
  });
  return out;
}

std::vector<std::size_t> fixed_vertex_counts(const Polytope& P, const IntVector& u) {
  std::vector<std::size_t> counts;
  std::optional<Rational> current;
  for (const auto& c : fixed_components(P, u)) {
    if (!current || *current != c.weight) {
      counts.push_back(0);
      current = c.weight;
    }
    counts.back() += c.vertices.size();
  }
  return counts;
}

std::size_t criticality(const Polytope& P, const IntVector& u) { return weights(P, u).size() - 1; }

Polytope pruning(const Polytope& P, const IntVector& u, const Rational& a, const Rational& b) {
  check_functional(P, u);
  if (a > b) throw GeometryError(Errc::invalid_argument, "pruning needs a <= b");
  return slab(P, u, a, b);
}

Polytope quotient(const Polytope& P, const IntVector& u, const Rational& a) {
  auto w = weights(P, u);
  if (a < w.front() || a > w.back())
    throw GeometryError(Errc::out_of_range, "level " + to_string(a) + " lies outside the weight range");
  return project_out(slab(P, u, a, a), u);
}

std::vector<Polytope> geometric_quotients(const Polytope& P, const IntVector& u) {
  auto w = weights(P, u);
  std::vector<Polytope> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out.push_back(quotient(P, u, (w[i] + w[i + 1]) / 2));
  return out;
}

VarietyFlags variety_flags(const Polytope& P) {
  ToricVariety X = from_normal_fan(P);
  VarietyFlags f;
  f.complete = X.is_complete();
  f.q_factorial = X.is_simplicial();
  f.smooth = X.is_smooth();
  f.fano = is_fano(X);
  return f;
}

QuotientStep compare_quotients(const Polytope& before, const Polytope& after) {
  QuotientStep s;
  s.facets_before = before.facet_count();
  s.facets_after = after.facet_count();
  if (combinatorially_equivalent(before, after)) {
    s.isomorphic = true;
    return s;
  }
  s.wall = classify_wall(before, after);
  s.elementary = is_wall_crossing(before, after);
  return s;
}

ActionReport action_info(const Polytope& P, const IntVector& u) {
  if (!P.is_full_dimensional())
    throw GeometryError(Errc::lower_dimensional, "action_info needs a full-dimensional polytope");
  ActionReport r;
  r.weights = weights(P, u);
  r.criticality = r.weights.size() - 1;
  r.components = fixed_components(P, u);
  r.fixed_vertex_counts = fixed_vertex_counts(P, u);
  auto quotients = geometric_quotients(P, u);
  for (const auto& q : quotients) r.quotient_vertex_counts.push_back(q.vertex_count());
  for (std::size_t i = 0; i + 1 < quotients.size(); ++i) r.steps.push_back(compare_quotients(quotients[i], quotients[i + 1]));
  r.flags = variety_flags(P);
  r.vertex_count = P.vertex_count();
  r.dimension = P.ambient_dim();
  return r;
}

namespace {

template <class T>
std::string bracket(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, Rational>)
      s += to_string(xs[i]);
    else
      s += std::to_string(xs[i]);
  }
  return s + "]";
}

std::string step_text(const QuotientStep& s) {
  if (s.isomorphic) return "an isomorphism";
  return describe(s.wall) + (s.elementary ? "" : " (not elementary)");
}

std::string step_key(const QuotientStep& s) {
  if (s.isomorphic) return "isomorphism";
  return to_string(s.wall);
}

}  // namespace

std::string render_text(const ActionReport& r) {
  std::ostringstream out;
  out << "The criticality of the action is " << r.criticality << "\n";
  out << "The weights are " << bracket(r.weights) << "\n";
  out << "The polytopes of fixed point components have " << bracket(r.fixed_vertex_counts) << " vertices\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    out << "The map GX_" << i << " --> GX_" << i + 1 << " is " << step_text(r.steps[i]) << "\n";
  auto is = [](bool b) { return b ? "is " : "is not "; };
  out << "The variety " << is(r.flags.complete) << "complete, " << is(r.flags.q_factorial) << "Q-factorial, "
      << is(r.flags.smooth) << "smooth, " << is(r.flags.fano) << "Fano\n";
  return out.str();
}

std::string render_structured(const ActionReport& r) {
  using nlohmann::json;
  json j;
  j["schema"] = "toricreal.action_report";
  j["version"] = 1;
  j["dimension"] = r.dimension;
  j["vertex_count"] = r.vertex_count;
  j["criticality"] = r.criticality;
  json w = json::array();
  for (const auto& x : r.weights) w.push_back(to_string(x));
  j["weights"] = w;
  j["fixed_vertex_counts"] = r.fixed_vertex_counts;
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"weight", to_string(c.weight)}, {"vertex_count", c.vertices.size()}});
  j["fixed_components"] = comps;
  j["quotient_vertex_counts"] = r.quotient_vertex_counts;
  json steps = json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    steps.push_back({{"from", i},
                     {"to", i + 1},
                     {"type", step_key(r.steps[i])},
                     {"elementary", r.steps[i].elementary},
                     {"facets_before", r.steps[i].facets_before},
                     {"facets_after", r.steps[i].facets_after}});
  j["walls"] = steps;
  j["flags"] = {{"complete", r.flags.complete},
                {"q_factorial", r.flags.q_factorial},
                {"smooth", r.flags.smooth},
                {"fano", r.flags.fano}};
  return j.dump(2) + "\n";
}

}  // namespace toricreal
