#include "digitop/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace digitop::io {

namespace {

// Integer rows of a line-oriented file. Empty rows are blank or comment lines.
template <class Fn>
void for_each_row(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError(source + ":" + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      row.push_back(v);
    }
    if (!row.empty()) fn(row, lineno);
  }
}

std::string where(const std::string& source, int lineno) { return source + ":" + std::to_string(lineno) + ": "; }

}  // namespace

PointSet parse_points(std::istream& in, const std::string& source, std::optional<int> dim) {
  PointSet out;
  for_each_row(in, source, [&](const std::vector<int>& row, int lineno) {
    const int n = static_cast<int>(row.size());
    if (!dim) {
      if (n > kMaxDim) throw InputError(where(source, lineno) + "dimension " + std::to_string(n) + " is too large");
      dim = n;
    }
    if (n != *dim)
      throw InputError(where(source, lineno) + "expected " + std::to_string(*dim) + " coordinates, got " +
                       std::to_string(n));
    out.insert(LatticePoint(std::span<const int>(row)));
  });
  return out;
}

PointSet load_points(const std::string& path, std::optional<int> dim) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return parse_points(f, path, dim);
}

void write_points(std::ostream& out, const PointSet& m) {
  for (const auto& p : m) {
    for (int a = 0; a < p.dim(); ++a) out << (a ? " " : "") << p[a];
    out << '\n';
  }
}

std::vector<Translation> parse_offsets(std::istream& in, const std::string& source, int n) {
  std::vector<Translation> out;
  for_each_row(in, source, [&](const std::vector<int>& row, int lineno) {
    if (static_cast<int>(row.size()) != n)
      throw InputError(where(source, lineno) + "expected " + std::to_string(n) + " coordinates, got " +
                       std::to_string(row.size()));
    out.emplace_back(std::span<const int>(row));
  });
  return out;
}

AdjacencySpec parse_adjacency(const std::string& arg, int n) {
  if (n < 1 || n > kMaxDim) throw InputError("dimension " + std::to_string(n) + " out of range");
  if (arg == "axis") return AdjacencySpec::axis(n);
  if (arg == "full") return AdjacencySpec::full(n);
  if (arg.rfind("custom:", 0) == 0) {
    const std::string path = arg.substr(7);
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    try {
      return AdjacencySpec::custom(n, parse_offsets(f, path, n));
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError("unknown adjacency '" + arg + "' (axis, full or custom:PATH)");
}

json adjacency_json(const AdjacencySpec& spec) {
  if (spec.kind() != AdjacencySpec::Kind::custom) return spec.name();
  json offs = json::array();
  for (const auto& t : spec.offsets()) offs.push_back(to_json(t));
  return json{{"custom", offs}};
}

LatticePoint point_from_json(const json& j) { return LatticePoint(j.get<std::vector<int>>()); }

Translation translation_from_json(const json& j) { return Translation(j.get<std::vector<int>>()); }

json to_json(const Cube& c) { return json{{"base", to_json(c.base())}, {"axes", c.axes()}}; }

Cube cube_from_json(const json& j) {
  std::uint32_t mask = 0;
  for (int a : j.at("axes").get<std::vector<int>>()) {
    if (a < 0 || a >= kMaxDim) throw InputError("cube axis out of range");
    mask |= 1u << a;
  }
  return Cube(point_from_json(j.at("base")), mask);
}

json to_json(const SeparationWitness& w) {
  return json{{"cube", to_json(w.cube)},   {"cstar", to_json(w.cstar)}, {"tau1", to_json(w.tau1)},
              {"tau2", to_json(w.tau2)}, {"point", to_json(w.point)}};
}

SeparationWitness separation_witness_from_json(const json& j) {
  return SeparationWitness{cube_from_json(j.at("cube")), cube_from_json(j.at("cstar")),
                           translation_from_json(j.at("tau1")), translation_from_json(j.at("tau2")),
                           point_from_json(j.at("point"))};
}

json to_json(const PropertyVerdict& v) {
  json j{{"holds", v.holds}};
  if (v.holds) return j;
  if (v.cube) j["cube"] = to_json(*v.cube);
  j["points"] = json::array();
  for (const auto& p : v.points) j["points"].push_back(to_json(p));
  j["note"] = v.note;
  if (v.separation) j["separation"] = to_json(*v.separation);
  return j;
}

PropertyVerdict property_from_json(const json& j) {
  PropertyVerdict v;
  v.holds = j.at("holds").get<bool>();
  if (j.contains("cube")) v.cube = cube_from_json(j["cube"]);
  if (j.contains("points"))
    for (const auto& p : j["points"]) v.points.push_back(point_from_json(p));
  if (j.contains("note")) v.note = j["note"].get<std::string>();
  if (j.contains("separation")) v.separation = separation_witness_from_json(j["separation"]);
  return v;
}

json to_json(const ManifoldReport& r) {
  return json{{"certified", r.certified()},
              {"first_failure", r.first_failure()},
              {"properties",
               {{"alpha-connected", to_json(r.alpha_connected)},
                {"cube-connected", to_json(r.cube_connected)},
                {"two-components", to_json(r.two_components)},
                {"component-unity", to_json(r.component_unity)},
                {"separation", to_json(r.separation)}}}};
}

json to_json(const DoublePointWitness& w) {
  return json{{"z", to_json(w.z)}, {"p", to_json(w.p)}, {"q", to_json(w.q)}, {"r", to_json(w.r)},
              {"tau", to_json(w.tau)}};
}

DoublePointWitness double_point_from_json(const json& j) {
  return DoublePointWitness{point_from_json(j.at("z")), point_from_json(j.at("p")), point_from_json(j.at("q")),
                            point_from_json(j.at("r")), translation_from_json(j.at("tau"))};
}

json to_json(const ContractionResult& c) {
  json j{{"verdict", to_string(c.verdict)}, {"generators", c.generators}, {"moves", c.moves}};
  if (c.stuck) {
    j["stuck"] = json::array();
    for (const auto& p : *c.stuck) j["stuck"].push_back(to_json(p));
  }
  return j;
}

json to_json(const GoodPairResult& g) {
  json doubles = json::array();
  for (const auto& w : g.doubles) doubles.push_back(to_json(w));
  return json{{"verdict", to_string(g.verdict)},
              {"separating",
               {{"verdict", to_string(g.separating.verdict)},
                {"sphere", to_json(g.separating.sphere)},
                {"contraction", to_json(g.separating.contraction)},
                {"N_used", g.separating.n_used}}},
              {"double_points", doubles}};
}

namespace {

json simplex_json(const std::optional<Simplex>& s) {
  if (!s) return nullptr;
  json j = json::array();
  for (const auto& v : s->vertices) j.push_back(to_json(v));
  return j;
}

template <class T>
json opt_point(const std::optional<T>& p) {
  return p ? to_json(*p) : json(nullptr);
}

}  // namespace

json to_json(const PseudomanifoldReport& r) {
  return json{{"dimension", r.dimension},
              {"pseudomanifold", r.holds()},
              {"homogeneous", {{"holds", r.homogeneous.holds}, {"witness", simplex_json(r.homogeneous.witness)}}},
              {"nondegenerate",
               {{"holds", r.nondegenerate.holds},
                {"witness", simplex_json(r.nondegenerate.witness)},
                {"cofaces", r.nondegenerate.cofaces}}},
              {"strongly_connected",
               {{"holds", r.strongly_connected.holds},
                {"classes", r.strongly_connected.classes},
                {"first", simplex_json(r.strongly_connected.first)},
                {"second", simplex_json(r.strongly_connected.second)}}}};
}

json to_json(const JordanReport& r) {
  return json{{"holds", r.holds()},
              {"margin", r.margin},
              {"components", r.components},
              {"two_components", r.two_components},
              {"inside_size", r.inside_size},
              {"outside_size", r.outside_size},
              {"common_boundary", r.common_boundary},
              {"boundary_witness", opt_point(r.boundary_witness)},
              {"no_simple_points", r.no_simple_points},
              {"simple_witness", opt_point(r.simple_witness)}};
}

json complex_json(const SimplicialComplex& k) {
  const std::vector<HalfPoint> verts = k.vertices();
  std::map<HalfPoint, std::size_t> index;
  json jv = json::array();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    index.emplace(verts[i], i);
    jv.push_back(to_json(verts[i]));
  }
  json js = json::array();
  for (const auto& s : k.simplices) {
    std::vector<std::size_t> ids;
    for (const auto& v : s.vertices) ids.push_back(index.at(v));
    std::sort(ids.begin(), ids.end());
    js.push_back(ids);
  }
  // Sorted by index lists rather than by coordinates.
  std::sort(js.begin(), js.end());
  json prov = json::object();
  for (const auto& [h, c] : k.provenance)
    if (c.dim() >= 1) prov[std::to_string(index.at(h))] = to_json(c);
  return json{{"n", k.n}, {"vertices", jv}, {"simplices", js}, {"provenance", prov}};
}

namespace {

std::string halved(int v) {
  const int whole = v / 2;
  if (v % 2 == 0) return std::to_string(whole);
  // v odd: v/2 = whole + sign(v) * 0.5 with truncation toward zero
  if (v < 0) return (whole == 0 ? "-0" : std::to_string(whole)) + ".5";
  return std::to_string(whole) + ".5";
}

}  // namespace

std::vector<std::string> write_off(std::ostream& out, const SimplicialComplex& k) {
  if (k.n != 3) throw std::invalid_argument("OFF export needs a complex in R^3");
  const std::vector<HalfPoint> verts = k.vertices();
  std::map<HalfPoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);
  const std::vector<Simplex> tris = k.of_dim(2);
  std::vector<std::string> warnings;
  int lower = 0, higher = 0;
  for (const auto& s : k.maximal()) {
    if (s.dim() < 2) ++lower;
    if (s.dim() > 2) ++higher;
  }
  if (lower) warnings.push_back(std::to_string(lower) + " maximal simplices of dimension < 2 omitted");
  if (higher) warnings.push_back(std::to_string(higher) + " simplices of dimension 3 exported by their triangles");
  out << "OFF\n" << verts.size() << ' ' << tris.size() << " 0\n";
  for (const auto& v : verts) out << halved(v[0]) << ' ' << halved(v[1]) << ' ' << halved(v[2]) << '\n';
  for (const auto& t : tris)
    out << "3 " << index.at(t.vertices[0]) << ' ' << index.at(t.vertices[1]) << ' ' << index.at(t.vertices[2])
        << '\n';
  return warnings;
}

}  // namespace digitop::io
