#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "toricreal/errors.hpp"
#include "toricreal/io.hpp"

using namespace toricreal;

namespace {

const std::string kData = TORICREAL_DATA_DIR;

template <class F>
std::string parse_failure(F f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

Fan fan_from(const std::string& text) {
  std::istringstream in(text);
  return read_fan(in);
}

Polytope polytope_from(const std::string& text) {
  std::istringstream in(text);
  return read_polytope(in);
}

}  // namespace

TEST(FanFormat, RoundTrip) {
  for (const ToricVariety& X : {fixtures::p2(), fixtures::hirzebruch(3), fixtures::batyrev33(), fixtures::p2_bundle()}) {
    std::ostringstream out;
    write_fan(out, X.fan());
    Fan back = fan_from(out.str());
    EXPECT_EQ(back.rays(), X.rays());
    EXPECT_TRUE(back.same_cones(X.fan()));
    std::ostringstream again;
    write_fan(again, back);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(FanFormat, CommentsAndBlankLinesAreIgnored) {
  Fan F = fan_from("# the projective plane\ntoricreal-fan 1\n\ndim 2\nrays 3  # three of them\n1 0\n0 1\n-1 -1\n"
                   "cones 3\n0 1\n0 2\n1 2\n");
  EXPECT_TRUE(F.same_cones(fixtures::p2().fan()));
}

TEST(FanFormat, MalformedInputReportsTheLine) {
  EXPECT_NE(parse_failure([] { fan_from("toricreal-fan 2\n"); }), "");
  EXPECT_NE(parse_failure([] { fan_from("toricreal-polytope 1\n"); }), "");
  EXPECT_NE(parse_failure([] { fan_from("toricreal-fan 1\ndim 2\nrays 2\n1 0\n"); }), "");
  std::string bad_row = parse_failure([] { fan_from("toricreal-fan 1\ndim 2\nrays 1\n1 0 0\ncones 0\n"); });
  EXPECT_NE(bad_row.find("line 4"), std::string::npos) << bad_row;
  EXPECT_NE(parse_failure([] { fan_from("toricreal-fan 1\ndim 2\nrays 1\n1 x\ncones 0\n"); }), "");
  EXPECT_NE(parse_failure([] { fan_from("toricreal-fan 1\ndim 2\nrays 2\n1 0\n0 1\ncones 1\n0 5\n"); }), "");
  EXPECT_NE(parse_failure([] { fan_from("toricreal-fan 1\ndim 1\nrays 1\n1\ncones 1\n0\ntrailing\n"); }), "");
}

TEST(FanFormat, InvalidFansAreGeometryErrors) {
  // Two overlapping cones.
  try {
    fan_from("toricreal-fan 1\ndim 2\nrays 3\n1 0\n0 1\n1 1\ncones 2\n0 1\n0 2\n");
    FAIL() << "expected an invalid fan";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::invalid_fan);
  } catch (const ParseError&) {
    SUCCEED();
  }
}

TEST(FanFormat, ShippedDataFiles) {
  EXPECT_TRUE(load_fan(kData + "/p2.fan").same_cones(fixtures::p2().fan()));
  EXPECT_TRUE(load_fan(kData + "/f1.fan").same_cones(fixtures::hirzebruch(1).fan()));
  Fan bundle = load_fan(kData + "/p2_bundle.fan");
  EXPECT_EQ(bundle.rays(), fixtures::p2_bundle().rays());
  EXPECT_TRUE(bundle.same_cones(fixtures::p2_bundle().fan()));
  EXPECT_TRUE(load_fan(kData + "/batyrev33.fan").same_cones(fixtures::batyrev33().fan()));
  EXPECT_THROW(load_fan(kData + "/does-not-exist.fan"), ParseError);
}

TEST(RelationsFormat, ReadsTheBatyrevFourfold) {
  auto rels = load_relations(kData + "/batyrev33.pr");
  ASSERT_EQ(rels.size(), 5u);
  ToricVariety Y = from_primitive_relations(rels);
  EXPECT_TRUE(Y.fan().same_cones(fixtures::batyrev33().fan()));
  std::istringstream bad("toricreal-relations 1\nrays 3\nv1 + v4 = 0\n");
  EXPECT_THROW(read_relations(bad), ParseError);
}

TEST(PolytopeFormat, RoundTripWithFractions) {
  Polytope T = Polytope::from_vertices(
      {RatVector{0, 0}, RatVector{Rational(1, 2), 0}, RatVector{0, 1}}, 2);
  std::ostringstream out;
  write_polytope(out, T);
  EXPECT_NE(out.str().find("1/2 0"), std::string::npos);
  EXPECT_EQ(polytope_from(out.str()), T);

  gen::Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    Polytope P = gen::polytope(rng, 2 + static_cast<std::size_t>(t % 3));
    std::ostringstream o;
    write_polytope(o, P);
    Polytope back = polytope_from(o.str());
    ASSERT_EQ(back, P);
    ASSERT_EQ(back.halfspaces(), P.halfspaces());
  }
}

TEST(PolytopeFormat, InconsistentHalfspacesAreRejected) {
  EXPECT_NE(parse_failure([] {
              polytope_from("toricreal-polytope 1\ndim 1\nvertices 2\n0\n1\nhalfspaces 2\n1 ; 0\n-1 ; 2\nequations 0\n");
            }),
            "");
  EXPECT_NE(parse_failure([] { polytope_from("toricreal-polytope 1\ndim 1\nvertices 1\n1/0\n"); }), "");
  EXPECT_NE(parse_failure([] {
              polytope_from("toricreal-polytope 1\ndim 1\nvertices 2\n0\n1\nhalfspaces 2\n1 0\n-1 ; 1\nequations 0\n");
            }),
            "");
}

TEST(PolytopeFormat, ShippedCremonaPolytope) {
  Polytope P = load_polytope(kData + "/cremona.poly");
  EXPECT_EQ(P, fixtures::cremona());
  EXPECT_EQ(P.vertex_count(), 22u);
}

TEST(OffFormat, CubeHasSixQuadrilaterals) {
  std::vector<RatVector> pts;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) pts.push_back(RatVector{x, y, z});
  std::ostringstream out;
  write_off(out, Polytope::from_vertices(pts, 3));
  std::istringstream in(out.str());
  std::string magic;
  std::size_t v = 0, f = 0, e = 0;
  in >> magic >> v >> f >> e;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(v, 8u);
  EXPECT_EQ(f, 6u);
  for (std::size_t i = 0; i < v; ++i) {
    double x, y, z;
    ASSERT_TRUE(in >> x >> y >> z);
  }
  for (std::size_t i = 0; i < f; ++i) {
    std::size_t n;
    ASSERT_TRUE(in >> n);
    EXPECT_EQ(n, 4u);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t idx;
      ASSERT_TRUE(in >> idx);
      EXPECT_LT(idx, v);
    }
  }
}

TEST(OffFormat, OnlyFullDimensionalSolids) {
  std::ostringstream out;
  Polytope square = Polytope::from_vertices({RatVector{0, 0}, RatVector{1, 0}, RatVector{0, 1}}, 2);
  try {
    write_off(out, square);
    FAIL() << "expected invalid_argument";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), Errc::invalid_argument);
  }
}
