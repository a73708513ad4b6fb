// Command-line front end. Every command loads its inputs, calls one library
// entry point and prints the result; exit codes are 2 for malformed input,
// 3 for violated preconditions and 4 for anything else.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toricreal/chambers.hpp"
#include "toricreal/cstar.hpp"
#include "toricreal/errors.hpp"
#include "toricreal/io.hpp"
#include "toricreal/realize.hpp"
#include "toricreal/toric.hpp"

namespace {

using namespace toricreal;
using nlohmann::json;

constexpr int kParseError = 2;
constexpr int kPreconditionError = 3;
constexpr int kInternalError = 4;

struct Options {
  std::string fan;
  std::string polytope;
  std::string relations;
  std::string A, B, C, H;
  std::string ell = "1";
  std::string report = "text";
  std::string functional;
  std::optional<std::size_t> coordinate;
  std::string a, b;
  std::string summands;
  std::string convention = "code";
  std::optional<std::uint64_t> seed;
  std::size_t max_modifications = 100;
  std::string out;
  std::string off;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

bool structured(const Options& o) { return o.report == "structured"; }

Divisor divisor(const ToricVariety& X, const std::string& literal, const char* name) {
  Divisor D = parse_rational_list(literal);
  if (D.size() != X.ray_count())
    throw GeometryError(Errc::invalid_argument, std::string("divisor ") + name + " has " + std::to_string(D.size()) +
                                                    " coefficients, the fan has " + std::to_string(X.ray_count()) +
                                                    " rays");
  return D;
}

IntVector functional(const Options& o, const Polytope& P) {
  if (!o.functional.empty()) {
    IntVector u = parse_integer_list(o.functional);
    if (u.size() != P.ambient_dim()) throw GeometryError(Errc::invalid_argument, "functional has the wrong length");
    return u;
  }
  if (o.coordinate) return coordinate_functional(P.ambient_dim(), *o.coordinate);
  return last_coordinate(P.ambient_dim());
}

std::string polytope_text(const Polytope& P) {
  std::ostringstream s;
  write_polytope(s, P);
  return s.str();
}

std::string fan_text(const Fan& F) {
  std::ostringstream s;
  write_fan(s, F);
  return s.str();
}

json rays_json(const std::vector<IntVector>& rays) {
  json a = json::array();
  for (const auto& r : rays) {
    json v = json::array();
    for (const auto& x : r) v.push_back(to_string(x));
    a.push_back(v);
  }
  return a;
}

int describe(const Options& o) {
  ToricVariety X(load_fan(o.fan));
  const ClassGroup& cl = X.class_group();
  const bool fano = X.is_complete() && is_fano(X);
  if (structured(o)) {
    json j = {{"schema", "toricreal.describe"},
              {"version", 1},
              {"dim", X.dim()},
              {"rays", X.ray_count()},
              {"cones", X.fan().cones().size()},
              {"complete", X.is_complete()},
              {"simplicial", X.is_simplicial()},
              {"smooth", X.is_smooth()},
              {"fano", fano},
              {"class_group_rank", cl.rank()}};
    json t = json::array();
    for (const auto& d : cl.torsion) t.push_back(to_string(d));
    j["class_group_torsion"] = t;
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream s;
  s << "dim " << X.dim() << "\n";
  s << "rays " << X.ray_count() << "\n";
  s << "cones " << X.fan().cones().size() << "\n";
  s << "complete " << yes(X.is_complete()) << "\n";
  s << "simplicial " << yes(X.is_simplicial()) << "\n";
  s << "smooth " << yes(X.is_smooth()) << "\n";
  s << "fano " << yes(fano) << "\n";
  s << "class group Z^" << cl.rank();
  for (const auto& d : cl.torsion) s << " + Z/" << to_string(d);
  s << "\n";
  emit(o, s.str());
  return 0;
}

int from_pr(const Options& o) {
  ToricVariety X = from_primitive_relations(load_relations(o.relations));
  emit(o, fan_text(X.fan()));
  return 0;
}

int bundle(const Options& o) {
  ToricVariety X(load_fan(o.fan));
  std::vector<IntVector> summands;
  std::istringstream ss(o.summands);
  for (std::string part; std::getline(ss, part, ';');) summands.push_back(parse_integer_list(part));
  emit(o, fan_text(projective_bundle(X, summands).fan()));
  return 0;
}

int movable(const Options& o) {
  ToricVariety X(load_fan(o.fan));
  Cone mov = movable_cone(X);
  Cone eff = effective_cone(X);
  if (structured(o)) {
    json j = {{"schema", "toricreal.cones"},
              {"version", 1},
              {"movable", rays_json(mov.rays())},
              {"effective", rays_json(eff.rays())}};
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << "movable cone";
  for (const auto& r : mov.rays()) s << " (" << join(r) << ")";
  s << "\neffective cone";
  for (const auto& r : eff.rays()) s << " (" << join(r) << ")";
  s << "\n";
  emit(o, s.str());
  return 0;
}

int chambers(const Options& o) {
  ToricVariety X(load_fan(o.fan));
  ChamberDecomposition cd = secondary_fan(X);
  if (!structured(o)) {
    emit(o, chamber_report(X, cd));
    return 0;
  }
  json ch = json::array();
  for (std::size_t i = 0; i < cd.chambers.size(); ++i)
    ch.push_back({{"index", i}, {"movable", cd.chambers[i].movable}, {"rays", rays_json(cd.chambers[i].cone.rays())}});
  json adj = json::array();
  for (std::size_t i = 0; i < cd.chambers.size(); ++i)
    for (std::size_t j = i + 1; j < cd.chambers.size(); ++j)
      if (cd.adjacent(i, j)) adj.push_back({i, j});
  json j = {{"schema", "toricreal.chambers"},
            {"version", 1},
            {"class_dim", cd.class_dim},
            {"ray_classes", rays_json(cd.ray_classes)},
            {"effective", rays_json(cd.effective.rays())},
            {"movable", rays_json(cd.movable.rays())},
            {"chambers", ch},
            {"adjacent", adj}};
  emit(o, j.dump(2) + "\n");
  return 0;
}

int wall_test(const Options& o) {
  ToricVariety X(load_fan(o.fan));
  Divisor A = divisor(X, o.A, "A"), B = divisor(X, o.B, "B");
  const bool same = same_chamber(X, A, B);
  Polytope PA = moment_polytope(X, A), PB = moment_polytope(X, B);
  std::optional<bool> crossing;
  std::optional<WallType> wall;
  if (!same) {
    crossing = is_wall_crossing(PA, PB);
    wall = classify_wall(PA, PB);
  }
  if (structured(o)) {
    json j = {{"schema", "toricreal.wall_test"},
              {"version", 1},
              {"same_chamber", same},
              {"facets_A", PA.facet_count()},
              {"facets_B", PB.facet_count()}};
    j["wall_crossing"] = crossing ? json(*crossing) : json(nullptr);
    j["wall"] = wall ? json(to_string(*wall)) : json(nullptr);
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream s;
  s << "same chamber " << (same ? "yes" : "no") << "\n";
  s << "facets " << PA.facet_count() << " " << PB.facet_count() << "\n";
  if (!same) {
    s << "wall crossing " << (*crossing ? "yes" : "no") << "\n";
    s << "wall " << to_string(*wall) << "\n";
  }
  emit(o, s.str());
  return 0;
}

// Shared tail of the realization commands: the report goes to stdout (or
// --out), the polytope with its provenance to --polytope-out, OFF to --off.
int finish_realization(const Options& o, const Realization& G, const std::string& polytope_out) {
  ActionReport r = action_info(G.polytope, G.u);
  if (!polytope_out.empty()) {
    std::ofstream f(polytope_out);
    if (!f) throw std::runtime_error("cannot write " + polytope_out);
    std::istringstream prov(render_provenance(G));
    for (std::string line; std::getline(prov, line);) f << "# " << line << "\n";
    f << polytope_text(G.polytope);
  }
  if (!o.off.empty()) {
    std::ofstream f(o.off);
    if (!f) throw std::runtime_error("cannot write " + o.off);
    write_off(f, G.polytope);
  }
  emit(o, structured(o) ? render_structured(G, r) : render_text(r));
  return 0;
}

int realize(const Options& o, const std::string& polytope_out) {
  ToricVariety Y(load_fan(o.fan));
  Realization G = geometric_realization(Y, divisor(Y, o.A, "A"), divisor(Y, o.B, "B"), parse_integer(o.ell));
  return finish_realization(o, G, polytope_out);
}

int sharp_realize(const Options& o, const std::string& polytope_out) {
  ToricVariety Y(load_fan(o.fan));
  Realization G = sharp_realization(Y, divisor(Y, o.A, "A"), divisor(Y, o.B, "B"), *o.seed, o.max_modifications);
  return finish_realization(o, G, polytope_out);
}

int fano_realize(const Options& o, const std::string& polytope_out) {
  ToricVariety Y(load_fan(o.fan));
  auto conv = o.convention == "prose" ? AmpleConvention::prose : AmpleConvention::code;
  Realization G = fano_realization(Y, divisor(Y, o.H, "H"), conv);
  return finish_realization(o, G, polytope_out);
}

int action_info_cmd(const Options& o) {
  Polytope P = load_polytope(o.polytope);
  ActionReport r = action_info(P, functional(o, P));
  emit(o, structured(o) ? render_structured(r) : render_text(r));
  return 0;
}

int quotients_cmd(const Options& o) {
  Polytope P = load_polytope(o.polytope);
  IntVector u = functional(o, P);
  auto w = weights(P, u);
  auto Q = geometric_quotients(P, u);
  std::ostringstream s;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    s << "# GX_" << i << " at level " << to_string((w[i] + w[i + 1]) / 2) << "\n";
    s << polytope_text(Q[i]);
  }
  emit(o, s.str());
  return 0;
}

int pruning_cmd(const Options& o) {
  Polytope P = load_polytope(o.polytope);
  Polytope R = pruning(P, functional(o, P), parse_rational(o.a), parse_rational(o.b));
  if (!o.off.empty()) {
    std::ofstream f(o.off);
    if (!f) throw std::runtime_error("cannot write " + o.off);
    write_off(f, R);
  }
  emit(o, polytope_text(R));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric realizations of toric birational maps"};
  app.require_subcommand(1);
  Options o;
  std::string polytope_out;

  auto report = [&](CLI::App* c) {
    c->add_option("--report", o.report, "Report format")->check(CLI::IsMember({"text", "structured"}));
  };
  auto out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write the main output to this file"); };
  auto fan = [&](CLI::App* c) { c->add_option("--fan", o.fan, "Fan file")->required(); };
  auto action = [&](CLI::App* c) {
    auto* f = c->add_option("--functional", o.functional, "Primitive functional u, comma separated");
    auto* j = c->add_option("--coordinate", o.coordinate, "Use u = e_j (0-based)");
    f->excludes(j);
  };
  auto realization = [&](CLI::App* c) {
    fan(c);
    report(c);
    out(c);
    c->add_option("--polytope-out", polytope_out, "Write the realization polytope with its provenance");
    c->add_option("--off", o.off, "Write the realization polytope as OFF (3-dimensional only)");
  };

  auto* describe_cmd = app.add_subcommand("describe", "Flags and class group of a fan");
  fan(describe_cmd);
  report(describe_cmd);
  out(describe_cmd);

  auto* from_pr_cmd = app.add_subcommand("from-pr", "Fan from primitive relations");
  from_pr_cmd->add_option("relations", o.relations, "Relations file")->required();
  out(from_pr_cmd);

  auto* bundle_cmd = app.add_subcommand("bundle", "Fan of P(O(D_1) + ... + O(D_t))");
  fan(bundle_cmd);
  bundle_cmd->add_option("--summands", o.summands, "Divisors D_i, ';' separated")->required();
  out(bundle_cmd);

  auto* movable_cmd = app.add_subcommand("movable-cone", "Movable and effective cones in class space");
  fan(movable_cmd);
  report(movable_cmd);
  out(movable_cmd);

  auto* chambers_cmd = app.add_subcommand("chambers", "Mori chambers of the effective cone");
  fan(chambers_cmd);
  report(chambers_cmd);
  out(chambers_cmd);

  auto* wall_cmd = app.add_subcommand("wall-test", "Compare the chambers of two divisors");
  fan(wall_cmd);
  wall_cmd->add_option("--A", o.A, "Divisor A")->required();
  wall_cmd->add_option("--B", o.B, "Divisor B")->required();
  report(wall_cmd);
  out(wall_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "Geometric realization of the map between two chambers");
  realization(realize_cmd);
  realize_cmd->add_option("--A", o.A, "Divisor A")->required();
  realize_cmd->add_option("--B", o.B, "Divisor B")->required();
  realize_cmd->add_option("--ell", o.ell, "Positive integer ell");

  auto* sharp_cmd = app.add_subcommand("sharp-realize", "Perturb A until the realization is sharp");
  realization(sharp_cmd);
  sharp_cmd->add_option("--A", o.A, "Divisor A")->required();
  sharp_cmd->add_option("--B", o.B, "Divisor B")->required();
  sharp_cmd->add_option("--seed", o.seed, "Seed for the perturbations")->required();
  sharp_cmd->add_option("--max-modifications", o.max_modifications, "Give up after this many perturbations");

  auto* fano_cmd = app.add_subcommand("fano-realize", "Fano realization of a Fano variety and divisor H");
  realization(fano_cmd);
  fano_cmd->add_option("--H", o.H, "Divisor H")->required();
  fano_cmd->add_option("--convention", o.convention, "Ampleness test for m")
      ->check(CLI::IsMember({"code", "prose"}));

  auto* info_cmd = app.add_subcommand("action-info", "Report on the C*-action of a polytope");
  info_cmd->add_option("--polytope", o.polytope, "Polytope file")->required();
  action(info_cmd);
  report(info_cmd);
  out(info_cmd);

  auto* quot_cmd = app.add_subcommand("quotients", "Geometric quotients as polytope files");
  quot_cmd->add_option("--polytope", o.polytope, "Polytope file")->required();
  action(quot_cmd);
  out(quot_cmd);

  auto* prune_cmd = app.add_subcommand("pruning", "Pruning of a polytope between two levels");
  prune_cmd->add_option("--polytope", o.polytope, "Polytope file")->required();
  prune_cmd->add_option("--a", o.a, "Lower level")->required();
  prune_cmd->add_option("--b", o.b, "Upper level")->required();
  prune_cmd->add_option("--off", o.off, "Also write OFF (3-dimensional only)");
  action(prune_cmd);
  out(prune_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*describe_cmd) return describe(o);
    if (*from_pr_cmd) return from_pr(o);
    if (*bundle_cmd) return bundle(o);
    if (*movable_cmd) return movable(o);
    if (*chambers_cmd) return chambers(o);
    if (*wall_cmd) return wall_test(o);
    if (*realize_cmd) return realize(o, polytope_out);
    if (*sharp_cmd) return sharp_realize(o, polytope_out);
    if (*fano_cmd) return fano_realize(o, polytope_out);
    if (*info_cmd) return action_info_cmd(o);
    if (*quot_cmd) return quotients_cmd(o);
    if (*prune_cmd) return pruning_cmd(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const GeometryError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPreconditionError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}
