// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "support.hpp"
#include "toricreal/chambers.hpp"
#include "toricreal/cstar.hpp"
#include "toricreal/linalg.hpp"
#include "toricreal/realize.hpp"

using namespace toricreal;

namespace {

// Collects the reasons a criterion fails.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  bool ok() const { return problems_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& p : problems_) s += (s.empty() ? "" : "; ") + p;
    return s;
  }

 private:
  std::vector<std::string> problems_;
};

using D = std::initializer_list<int>;

std::string block(std::initializer_list<const char*> lines) {
  std::string s;
  for (const char* l : lines) s += std::string(l) + "\n";
  return s;
}

void batyrev_reconstruction(Check& c) {
  const char* texts[] = {"v1 + v7 = 0", "v2 + v3 + v4 = v1", "v4 + v5 + v6 = 2v1", "v5 + v6 + v7 = v2 + v3",
                         "v1 + v2 + v3 = v5 + v6"};
  std::vector<PrimitiveRelation> rels;
  for (const char* t : texts) rels.push_back(parse_primitive_relation(t, 7));
  ToricVariety Y = from_primitive_relations(rels);
  c.require(Y.ray_count() == 7, "expected 7 rays");
  c.require(Y.is_complete(), "fan is not complete");
  c.require(Y.is_simplicial(), "fan is not simplicial");
  c.require(Y.is_smooth(), "fan is not smooth");
  for (const auto& r : rels) {
    IntVector sum(Y.dim());
    for (std::size_t i = 0; i < Y.ray_count(); ++i)
      for (std::size_t k = 0; k < Y.dim(); ++k) sum[k] += r.coefficients[i] * Y.rays()[i][k];
    c.require(std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x == 0; }),
              "a primitive relation does not hold");
  }
  c.require(is_fano(Y), "not Fano");
  ChamberDecomposition cd = secondary_fan(Y);
  c.require(cd.chambers.size() == 6, "expected 6 chambers, got " + std::to_string(cd.chambers.size()));
  c.require(cd.movable_count() == 3, "expected 3 movable chambers, got " + std::to_string(cd.movable_count()));
  std::vector<IntVector> gens;
  for (const auto& ch : cd.chambers)
    if (ch.movable) gens.insert(gens.end(), ch.cone.rays().begin(), ch.cone.rays().end());
  c.require(Cone::from_generators(gens, cd.class_dim) == cd.movable, "movable chambers do not cover Mov");
}

void report_matches(Check& c, const Realization& G, const std::string& expected, std::size_t vertices) {
  c.require(G.polytope.vertex_count() == vertices,
            "expected " + std::to_string(vertices) + " vertices, got " + std::to_string(G.polytope.vertex_count()));
  std::string text = render_text(action_info(G.polytope, G.u));
  c.require(text == expected, "report differs:\n" + text);
}

void run_one(Check& c) {
  Realization G = geometric_realization(fixtures::batyrev33(), fixtures::divisor({1, 0, 0, 0, 0, 2, 1}),
                                        fixtures::divisor({1, 2, 0, 0, 0, 0, 1}), 1);
  c.require(is_lattice_polytope(G.polytope), "not a lattice polytope");
  report_matches(c, G,
                 block({"The criticality of the action is 3", "The weights are [0,4,9,12]",
                        "The polytopes of fixed point components have [8,1,1,8] vertices",
                        "The map GX_0 --> GX_1 is a flip", "The map GX_1 --> GX_2 is a flip",
                        "The variety is complete, is Q-factorial, is not smooth, is Fano"}),
                 18);
}

void run_two(Check& c) {
  Realization G = geometric_realization(fixtures::batyrev33(), fixtures::divisor({1, 0, 0, 0, 0, 6, 1}),
                                        fixtures::divisor({1, 6, 0, 0, 0, 0, 1}), 1);
  report_matches(c, G,
                 block({"The criticality of the action is 5", "The weights are [0,2,5,7,8,12]",
                        "The polytopes of fixed point components have [8,2,1,1,2,8] vertices",
                        "The map GX_0 --> GX_1 is a divisorial extraction", "The map GX_1 --> GX_2 is a flip",
                        "The map GX_2 --> GX_3 is a flip", "The map GX_3 --> GX_4 is a divisorial contraction",
                        "The variety is complete, is Q-factorial, is not smooth, is not Fano"}),
                 22);
}

void fano_run(Check& c) {
  Realization G = fano_realization(fixtures::batyrev33(), fixtures::divisor({1, 0, 1, 0, -1, 0, 0}));
  ActionReport r = action_info(G.polytope, G.u);
  c.require(r.criticality == 4, "expected criticality 4");
  c.require(r.flags.fano, "realization is not Fano");
  std::string text = render_text(r);
  c.require(text == block({"The criticality of the action is 4", "The weights are [-12,-1,7,9,12]",
                           "The polytopes of fixed point components have [12,1,2,1,8] vertices",
                           "The map GX_0 --> GX_1 is a flip", "The map GX_1 --> GX_2 is a divisorial contraction",
                           "The map GX_2 --> GX_3 is a flip",
                           "The variety is complete, is Q-factorial, is not smooth, is Fano"}),
            "report differs:\n" + text);
}

void bundle_runs(Check& c) {
  ToricVariety Y = fixtures::p2_bundle();
  std::vector<IntVector> expected_rays;
  for (D r : {D{-1, -1, 1, 1}, D{0, 0, -1, -1}, D{0, 0, 0, 1}, D{0, 0, 1, 0}, D{0, 1, 0, 0}, D{1, 0, 0, 0}}) {
    IntVector v;
    for (int x : r) v.emplace_back(x);
    expected_rays.push_back(v);
  }
  c.require(Y.rays() == expected_rays, "rays differ from the expected list");
  auto cls = [&](std::size_t i) { return divisor_class(Y, prime_divisor(Y, i)); };
  RatVector d2_minus_d1 = divisor_class(Y, fixtures::divisor({-1, 1, 0, 0, 0, 0}));
  c.require(cls(0) == cls(4) && cls(0) == cls(5), "[D1] = [D5] = [D6] fails");
  c.require(cls(2) == cls(3) && cls(2) == d2_minus_d1, "[D3] = [D4] = [D2 - D1] fails");
  Cone expected = Cone::from_generators(std::vector<RatVector>{cls(0), cls(2)}, Y.class_group().rank());
  c.require(movable_cone(Y) == expected, "movable cone is not <[D1],[D3]>");

  auto first = geometric_realization(Y, fixtures::divisor({2, 2, 0, 0, 0, 0}), fixtures::divisor({-1, 2, 0, 0, 0, 0}), 3);
  std::string t1 = render_text(action_info(first.polytope, first.u));
  c.require(t1 == block({"The criticality of the action is 2", "The weights are [0,2,3]",
                         "The polytopes of fixed point components have [9,1,8] vertices",
                         "The map GX_0 --> GX_1 is a flip",
                         "The variety is complete, is Q-factorial, is smooth, is not Fano"}),
            "first report differs:\n" + t1);
  auto second =
      geometric_realization(Y, fixtures::divisor({2, 2, 0, 0, 0, 0}), fixtures::divisor({-2, 2, 0, 0, 0, 0}), 4);
  std::string t2 = render_text(action_info(second.polytope, second.u));
  c.require(t2 == block({"The criticality of the action is 2", "The weights are [0,2,4]",
                         "The polytopes of fixed point components have [9,1,2] vertices",
                         "The map GX_0 --> GX_1 is a flip",
                         "The variety is complete, is Q-factorial, is smooth, is Fano"}),
            "second report differs:\n" + t2);
}

void cremona(Check& c) {
  Polytope P = fixtures::cremona();
  IntVector u{1, 1, 1, 1};
  auto Q = geometric_quotients(P, u);
  c.require(Q.size() == 4, "expected 4 geometric quotients, got " + std::to_string(Q.size()));
  if (Q.size() != 4) return;
  for (std::size_t i : {std::size_t{0}, std::size_t{3}})
    c.require(Q[i].dim() == 3 && Q[i].vertex_count() == 4 && Q[i].facet_count() == 4,
              "quotient " + std::to_string(i) + " is not a 3-simplex");
  const WallType expected[] = {WallType::divisorial_extraction, WallType::flip, WallType::divisorial_contraction};
  for (std::size_t i = 0; i < 3; ++i)
    c.require(classify_wall(Q[i], Q[i + 1]) == expected[i], "wall " + std::to_string(i) + " has the wrong class");
}

void property_suites(Check& c) {
  constexpr std::size_t cases = 200;
  const std::pair<const char*, properties::Outcome (*)(std::uint64_t, std::size_t)> suites[] = {
      {"dual-description roundtrip", properties::dual_description_roundtrip},
      {"ample normal fan", properties::ample_normal_fan},
      {"same_chamber scaling", properties::same_chamber_scaling},
      {"pruning composition", properties::pruning_composition},
      {"criticality monotonicity", properties::criticality_monotone},
      {"classify_wall antisymmetry", properties::classify_antisymmetry},
      {"byte-identical reports", properties::reproducible_reports},
  };
  for (const auto& [name, run] : suites) {
    auto out = run(20240601, cases);
    c.require(out.cases >= cases, std::string(name) + ": only " + std::to_string(out.cases) + " cases");
    c.require(out.ok(), std::string(name) + ": " + out.first_failure);
  }
}

void wall_test_agreement(Check& c) {
  ToricVariety Y = fixtures::batyrev33();
  ChamberDecomposition cd = secondary_fan(Y);
  std::vector<Polytope> P;
  for (const auto& ch : cd.chambers) P.push_back(moment_polytope(Y, ch.sample));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j, ++pairs)
      c.require(is_wall_crossing(P[i], P[j]) == cd.adjacent(i, j),
                "N" + std::to_string(i) + ", N" + std::to_string(j) + " disagree");
  c.require(pairs == 15, "expected 15 chamber pairs, got " + std::to_string(pairs));
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"Batyrev #33 reconstruction and six chambers", batyrev_reconstruction},
      {"first Batyrev realization report", run_one},
      {"second Batyrev realization report", run_two},
      {"Fano realization report", fano_run},
      {"projective bundle over P2 and its two realizations", bundle_runs},
      {"Cremona structure", cremona},
      {"property suites", property_suites},
      {"wall test agrees with chamber adjacency", wall_test_agreement},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!c.ok()) {
      std::cout << " (" << c.summary() << ")";
      ++failed;
    }
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
