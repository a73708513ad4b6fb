#include "toricreal/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "toricreal/errors.hpp"

namespace toricreal {

namespace {

// Reads non-empty lines with comments stripped, tracking line numbers for
// error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string what) : in_(in), what_(std::move(what)) {}

  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = raw.find_last_not_of(" \t\r");
      line = raw.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  std::string expect_line(const std::string& context) {
    std::string line;
    if (!next(line)) fail("unexpected end of input, expected " + context);
    return line;
  }

  std::vector<std::string> expect_tokens(const std::string& context) {
    std::istringstream ss(expect_line(context));
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
  }

  // "keyword N"
  std::size_t expect_count(const std::string& keyword) {
    auto t = expect_tokens(keyword);
    if (t.size() != 2 || t[0] != keyword) fail("expected '" + keyword + " <count>'");
    return to_size(t[1]);
  }

  void expect_header(const std::string& magic) {
    auto t = expect_tokens("header");
    if (t.size() != 2 || t[0] != magic) fail("expected header '" + magic + " 1'");
    if (t[1] != "1") fail("unsupported " + magic + " version " + t[1]);
  }

  std::size_t to_size(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail("expected a nonnegative integer, got '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(what_ + " line " + std::to_string(number_) + ": " + msg);
  }

  void expect_end() {
    std::string line;
    if (next(line)) fail("trailing content '" + line + "'");
  }

 private:
  std::istream& in_;
  std::string what_;
  std::size_t number_ = 0;
};

template <class T, class Parse>
std::vector<T> parse_row(LineReader& r, const std::vector<std::string>& tokens, std::size_t n, Parse parse) {
  if (tokens.size() != n)
    r.fail("expected " + std::to_string(n) + " entries, got " + std::to_string(tokens.size()));
  std::vector<T> out;
  for (const auto& t : tokens) {
    try {
      out.push_back(parse(t));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
  }
  return out;
}

std::vector<Halfspace> read_halfspace_block(LineReader& r, const std::string& keyword, std::size_t dim) {
  const std::size_t count = r.expect_count(keyword);
  std::vector<Halfspace> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto tokens = r.expect_tokens(keyword);
    auto semi = std::find(tokens.begin(), tokens.end(), ";");
    if (semi == tokens.end() || semi + 2 != tokens.end()) r.fail("expected '<normal> ; <offset>'");
    Halfspace h;
    h.normal = parse_row<Integer>(r, {tokens.begin(), semi}, dim, parse_integer);
    h.offset = parse_row<Rational>(r, {semi + 1, tokens.end()}, 1, parse_rational).front();
    out.push_back(std::move(h));
  }
  return out;
}

void write_halfspace_block(std::ostream& out, const std::string& keyword, const std::vector<Halfspace>& hs) {
  out << keyword << " " << hs.size() << "\n";
  for (const auto& h : hs) out << join(h.normal, " ") << " ; " << to_string(h.offset) << "\n";
}

template <class Reader>
auto load(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return reader(in);
}

}  // namespace

Fan read_fan(std::istream& in) {
  LineReader r(in, "fan");
  r.expect_header("toricreal-fan");
  const std::size_t dim = r.expect_count("dim");
  if (dim == 0) r.fail("dim must be positive");
  const std::size_t nrays = r.expect_count("rays");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < nrays; ++i) rays.push_back(parse_row<Integer>(r, r.expect_tokens("ray"), dim, parse_integer));
  const std::size_t ncones = r.expect_count("cones");
  std::vector<ConeIndices> cones;
  for (std::size_t i = 0; i < ncones; ++i) {
    auto tokens = r.expect_tokens("cone");
    ConeIndices c;
    for (const auto& t : tokens) {
      std::size_t idx = r.to_size(t);
      if (idx >= nrays) r.fail("ray index " + t + " out of range");
      c.push_back(idx);
    }
    if (c.empty()) r.fail("empty cone");
    cones.push_back(std::move(c));
  }
  r.expect_end();
  return Fan::validated(dim, std::move(rays), std::move(cones));
}

void write_fan(std::ostream& out, const Fan& fan) {
  out << "toricreal-fan 1\n";
  out << "dim " << fan.dim() << "\n";
  out << "rays " << fan.rays().size() << "\n";
  for (const auto& ray : fan.rays()) out << join(ray, " ") << "\n";
  out << "cones " << fan.cones().size() << "\n";
  for (const auto& c : fan.cones()) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << "\n";
  }
}

std::vector<PrimitiveRelation> read_relations(std::istream& in) {
  LineReader r(in, "relations");
  r.expect_header("toricreal-relations");
  const std::size_t nrays = r.expect_count("rays");
  std::vector<PrimitiveRelation> out;
  for (std::string line; r.next(line);) {
    try {
      out.push_back(parse_primitive_relation(line, nrays));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
    if (out.back().coefficients.size() > nrays) r.fail("relation refers to a ray beyond v" + std::to_string(nrays));
  }
  if (out.empty()) r.fail("no relations");
  return out;
}

Polytope read_polytope(std::istream& in) {
  LineReader r(in, "polytope");
  r.expect_header("toricreal-polytope");
  const std::size_t dim = r.expect_count("dim");
  if (dim == 0) r.fail("dim must be positive");
  const std::size_t nv = r.expect_count("vertices");
  if (nv == 0) r.fail("a polytope needs at least one vertex");
  std::vector<RatVector> vertices;
  for (std::size_t i = 0; i < nv; ++i)
    vertices.push_back(parse_row<Rational>(r, r.expect_tokens("vertex"), dim, parse_rational));
  auto halfspaces = read_halfspace_block(r, "halfspaces", dim);
  auto equations = read_halfspace_block(r, "equations", dim);
  r.expect_end();

  Polytope P = Polytope::from_vertices(vertices, dim);
  std::sort(halfspaces.begin(), halfspaces.end());
  std::sort(equations.begin(), equations.end());
  if (P.vertex_count() != nv) r.fail("vertex list contains points that are not vertices");
  if (halfspaces != P.halfspaces()) r.fail("halfspaces do not match the hull of the vertices");
  if (equations != P.equations()) r.fail("equations do not match the hull of the vertices");
  return P;
}

void write_polytope(std::ostream& out, const Polytope& P) {
  out << "toricreal-polytope 1\n";
  out << "dim " << P.ambient_dim() << "\n";
  out << "vertices " << P.vertex_count() << "\n";
  for (const auto& v : P.vertices()) out << join(v, " ") << "\n";
  write_halfspace_block(out, "halfspaces", P.halfspaces());
  write_halfspace_block(out, "equations", P.equations());
}

void write_off(std::ostream& out, const Polytope& P) {
  if (P.ambient_dim() != 3 || !P.is_full_dimensional())
    throw GeometryError(Errc::invalid_argument, "OFF export needs a full-dimensional polytope in R^3");
  using V3 = std::array<double, 3>;
  std::vector<V3> pts;
  for (const auto& v : P.vertices()) pts.push_back({v[0].get_d(), v[1].get_d(), v[2].get_d()});

  auto sub = [](const V3& a, const V3& b) { return V3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto cross = [](const V3& a, const V3& b) {
    return V3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot3 = [](const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };

  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t f = 0; f < P.facet_count(); ++f) {
    auto idx = P.vertices_on(f);
    const auto& nrm = P.halfspaces()[f].normal;
    V3 outward{-nrm[0].get_d(), -nrm[1].get_d(), -nrm[2].get_d()};
    V3 c{0, 0, 0};
    for (auto i : idx)
      for (int k = 0; k < 3; ++k) c[k] += pts[i][k] / static_cast<double>(idx.size());
    // In-plane frame (e1, e2) with e1 x e2 along the outward normal.
    V3 e1 = sub(pts[idx.front()], c);
    V3 e2 = cross(outward, e1);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      V3 da = sub(pts[a], c), db = sub(pts[b], c);
      return std::atan2(dot3(da, e2), dot3(da, e1)) < std::atan2(dot3(db, e2), dot3(db, e1));
    });
    faces.push_back(std::move(idx));
  }

  out << "OFF\n" << pts.size() << " " << faces.size() << " 0\n";
  out << std::setprecision(17);
  for (const auto& p : pts) out << p[0] << " " << p[1] << " " << p[2] << "\n";
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << " " << i;
    out << "\n";
  }
}

Fan load_fan(const std::string& path) { return load(path, [](std::istream& in) { return read_fan(in); }); }

std::vector<PrimitiveRelation> load_relations(const std::string& path) {
  return load(path, [](std::istream& in) { return read_relations(in); });
}

Polytope load_polytope(const std::string& path) {
  return load(path, [](std::istream& in) { return read_polytope(in); });
}

}  // namespace toricreal
