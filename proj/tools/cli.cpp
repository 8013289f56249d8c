#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "digitop/io.hpp"
#include "digitop/jordan.hpp"
#include "digitop/pseudomanifold.hpp"

namespace digitop::cli {

using io::json;

namespace {

struct RunConfig {
  std::string command;
  std::string points;
  std::string alpha = "axis";
  std::string beta = "full";
  int n = 0;  // 0: infer from the points
  int margin = 2;
  int N = 2;
  long long budget = 100000;
  std::string format = "text";
  std::string output;
  std::string replay;
  std::string kind;
  std::vector<int> size;

  json to_json() const {
    json j{{"command", command}, {"alpha", alpha}, {"beta", beta}, {"n", n},
           {"margin", margin},   {"N", N},         {"budget", budget}};
    if (!points.empty()) j["points"] = points;
    if (!kind.empty()) j["kind"] = kind;
    if (!size.empty()) j["size"] = size;
    return j;
  }

  static RunConfig from_json(const json& j) {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.alpha = j.at("alpha").get<std::string>();
    c.beta = j.at("beta").get<std::string>();
    c.n = j.at("n").get<int>();
    c.margin = j.at("margin").get<int>();
    c.N = j.at("N").get<int>();
    c.budget = j.at("budget").get<long long>();
    if (j.contains("points")) c.points = j["points"].get<std::string>();
    if (j.contains("kind")) c.kind = j["kind"].get<std::string>();
    if (j.contains("size")) c.size = j["size"].get<std::vector<int>>();
    return c;
  }
};

// Usage problems found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kHolds;
  json report;
  std::string text;
  std::vector<std::string> warnings;
  bool replayed = true;  // independent witness check, where one exists
};

std::string verdict_name(int code) {
  switch (code) {
    case kHolds: return "holds";
    case kFails: return "fails";
    case kUnknown: return "unknown";
  }
  return "error";
}

int code_of(Decision d) { return d == Decision::yes ? kHolds : d == Decision::no ? kFails : kUnknown; }

struct Input {
  PointSet m;
  AdjacencyPair pair;
};

Input load(RunConfig& c) {
  if (c.points.empty()) throw UsageError(c.command + " needs --points");
  PointSet m = io::load_points(c.points, c.n > 0 ? std::optional<int>(c.n) : std::nullopt);
  if (c.n == 0) {
    if (m.empty()) throw UsageError("empty point file: give --n");
    c.n = m.begin()->dim();
  }
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.margin < 2) throw UsageError("--margin must be at least 2");
  return {std::move(m), AdjacencyPair(io::parse_adjacency(c.alpha, c.n), io::parse_adjacency(c.beta, c.n))};
}

std::string pt(const LatticePoint& p) { return p.str(); }

std::string property_line(const std::string& name, const PropertyVerdict& v) {
  std::string s = name + ": " + (v.holds ? "holds" : "fails");
  if (v.holds) return s;
  if (v.cube) s += " cube " + v.cube->str();
  for (const auto& p : v.points) s += " " + pt(p);
  if (!v.note.empty()) s += " (" + v.note + ")";
  return s;
}

const std::vector<std::pair<std::string, const PropertyVerdict ManifoldReport::*>> kProperties{
    {"alpha-connected", &ManifoldReport::alpha_connected}, {"cube-connected", &ManifoldReport::cube_connected},
    {"two-components", &ManifoldReport::two_components},   {"component-unity", &ManifoldReport::component_unity},
    {"separation", &ManifoldReport::separation}};

Outcome verify_manifold(RunConfig& c) {
  const Input in = load(c);
  const ManifoldReport rep = check_manifold(in.m, in.pair, c.margin);
  Outcome o;
  o.code = rep.certified() ? kHolds : kFails;
  o.report = io::to_json(rep);
  std::ostringstream t;
  t << "certified: " << (rep.certified() ? "yes" : "no") << '\n';
  for (const auto& [name, field] : kProperties) t << property_line(name, rep.*field) << '\n';
  o.text = t.str();
  if (!rep.certified()) {
    const std::string f = rep.first_failure();
    for (const auto& [name, field] : kProperties)
      if (name == f) o.replayed = replay_property(name, rep.*field, in.m, in.pair, c.margin);
  }
  return o;
}

Outcome check_separation(RunConfig& c) {
  const Input in = load(c);
  if (in.m.empty()) throw UsageError("check-separation needs a nonempty set");
  const Region r = Region::around(in.m, c.margin);
  const SeparationVerdict v = has_separation_property(in.m, in.pair, r);
  Outcome o;
  o.code = v.holds ? kHolds : kFails;
  o.report = json{{"holds", v.holds}, {"witness", v.witness ? io::to_json(*v.witness) : json(nullptr)}};
  std::ostringstream t;
  t << "separation: " << (v.holds ? "holds" : "fails") << '\n';
  if (v.witness)
    t << "cube " << v.witness->cube.str() << " face " << v.witness->cstar.str() << " tau1 " << v.witness->tau1.str()
      << " tau2 " << v.witness->tau2.str() << " point " << pt(v.witness->point) << '\n';
  o.text = t.str();
  if (v.witness) o.replayed = replay_separation_witness(in.m, in.pair, r, *v.witness);
  return o;
}

json summary(const SimplicialComplex& k) {
  return json{{"f_vector", k.f_vector()}, {"euler", euler_characteristic(k)}, {"dimension", k.dimension()}};
}

std::string f_text(const SimplicialComplex& k) {
  std::string s;
  for (auto f : k.f_vector()) s += (s.empty() ? "" : " ") + std::to_string(f);
  return "f = (" + s + ") chi = " + std::to_string(euler_characteristic(k));
}

Outcome build(RunConfig& c) {
  const Input in = load(c);
  const SimplicialComplex k = build_complex(in.m, in.pair);
  const SimplicialComplex kp = reduce_complex(k, in.m, in.pair);
  Outcome o;
  if (c.format == "off") {
    std::ostringstream off;
    o.warnings = io::write_off(off, kp);
    o.text = off.str();
    return o;
  }
  o.report = json{{"K", io::complex_json(k)}, {"K_reduced", io::complex_json(kp)}};
  o.text = "K:  " + f_text(k) + "\nK': " + f_text(kp) + "\n";
  return o;
}

Outcome euler(RunConfig& c) {
  const Input in = load(c);
  const SimplicialComplex k = build_complex(in.m, in.pair);
  const SimplicialComplex kp = reduce_complex(k, in.m, in.pair);
  Outcome o;
  o.report = json{{"K", summary(k)}, {"K_reduced", summary(kp)}};
  o.text = "K:  " + f_text(k) + "\nK': " + f_text(kp) + "\n";
  return o;
}

Outcome check_pseudomanifold(RunConfig& c) {
  const Input in = load(c);
  const SimplicialComplex kp = reduce_complex(build_complex(in.m, in.pair), in.m, in.pair);
  const PseudomanifoldReport r = is_pseudomanifold(kp, c.n - 1);
  Outcome o;
  if (kp.empty()) o.warnings.push_back("empty complex: vacuously a pseudomanifold");
  o.code = r.holds() ? kHolds : kFails;
  o.report = io::to_json(r);
  std::ostringstream t;
  t << "pseudomanifold of dimension " << r.dimension << ": " << (r.holds() ? "yes" : "no") << '\n';
  t << "homogeneous: " << (r.homogeneous.holds ? "holds" : "fails " + r.homogeneous.witness->str()) << '\n';
  t << "nondegenerate: "
    << (r.nondegenerate.holds ? "holds"
                              : "fails " + r.nondegenerate.witness->str() + " has " +
                                    std::to_string(r.nondegenerate.cofaces) + " cofaces")
    << '\n';
  t << "strongly connected: "
    << (r.strongly_connected.holds
            ? "holds"
            : "fails " + std::to_string(r.strongly_connected.classes) + " classes, e.g. " +
                  r.strongly_connected.first->str() + " and " + r.strongly_connected.second->str())
    << '\n';
  o.text = t.str();
  // Witnesses re-checked by direct counts.
  if (!r.nondegenerate.holds) {
    int cof = 0;
    for (const auto& s : kp.of_dim(c.n - 1)) cof += r.nondegenerate.witness->is_face_of(s);
    o.replayed = o.replayed && cof == r.nondegenerate.cofaces && cof != 2;
  }
  if (!r.homogeneous.holds) {
    const Simplex& w = *r.homogeneous.witness;
    bool covered = false;
    for (const auto& s : kp.of_dim(c.n - 1)) covered = covered || w.is_face_of(s);
    o.replayed = o.replayed && !covered;
  }
  return o;
}

Outcome jordan(RunConfig& c) {
  const Input in = load(c);
  Outcome o;
  try {
    const JordanReport r = jordan_check(in.m, in.pair, c.margin);
    o.code = r.holds() ? kHolds : kFails;
    o.report = json{{"certified", true}, {"jordan", io::to_json(r)}};
    std::ostringstream t;
    t << "jordan: " << (r.holds() ? "holds" : "fails") << '\n'
      << "components: " << r.components << " (inside " << r.inside_size << ", outside " << r.outside_size << ")\n"
      << "common boundary: " << (r.common_boundary ? "yes" : "no, " + pt(*r.boundary_witness)) << '\n'
      << "no simple points: " << (r.no_simple_points ? "yes" : "no, " + pt(*r.simple_witness)) << '\n';
    o.text = t.str();
    if (r.simple_witness)
      o.replayed = is_simple_point(*r.simple_witness, in.m, in.pair, Region::around(in.m, c.margin));
  } catch (const NotCertified& e) {
    o.code = kFails;
    o.report = json{{"certified", false}, {"manifold", io::to_json(e.report)}};
    o.text = std::string(e.what()) + "\n";
  }
  return o;
}

Outcome good_pair(RunConfig& c) {
  if (c.n < 2) throw UsageError("good-pair needs --n >= 2");
  if (c.N < 1) throw UsageError("--N must be at least 1");
  if (c.budget < 0) throw UsageError("--budget must be >= 0");
  const AdjacencyPair pair(io::parse_adjacency(c.alpha, c.n), io::parse_adjacency(c.beta, c.n));
  const GoodPairResult g = is_good_pair(pair, c.N, static_cast<std::size_t>(c.budget));
  Outcome o;
  o.code = code_of(g.verdict);
  o.report = io::to_json(g);
  std::ostringstream t;
  t << "good pair: " << to_string(g.verdict) << '\n';
  t << "separating: " << to_string(g.separating.verdict);
  if (g.separating.n_used) t << " (N = " << g.separating.n_used << ")";
  t << '\n';
  if (!g.separating.sphere.certified()) t << "beta(0) fails " << g.separating.sphere.first_failure() << '\n';
  for (const auto& w : g.doubles)
    t << "double point z " << pt(w.z) << " p " << pt(w.p) << " q " << pt(w.q) << " r " << pt(w.r) << " tau "
      << w.tau.str() << '\n';
  o.text = t.str();
  for (const auto& w : g.doubles) o.replayed = o.replayed && validate_double_point(w, pair);
  return o;
}

Outcome generate_cmd(RunConfig& c) {
  if (c.kind.empty()) throw UsageError("generate needs --kind");
  const PointSet m = generate(GeneratorSpec{parse_generator_kind(c.kind), c.size});
  Outcome o;
  json pts = json::array();
  for (const auto& p : m) pts.push_back(io::to_json(p));
  o.report = json{{"count", m.size()}, {"points", pts}};
  std::ostringstream t;
  io::write_points(t, m);
  o.text = t.str();
  return o;
}

Outcome simple_points(RunConfig& c) {
  const Input in = load(c);
  if (in.m.empty()) throw UsageError("simple-points needs a nonempty set");
  const Region r = Region::around(in.m, c.margin);
  Outcome o;
  json pts = json::array();
  std::ostringstream t;
  for (const auto& p : in.m)
    if (is_simple_point(p, in.m, in.pair, r)) {
      pts.push_back(io::to_json(p));
      t << pt(p) << '\n';
    }
  o.report = json{{"count", pts.size()}, {"simple_points", pts}};
  o.text = std::to_string(pts.size()) + " simple points\n" + t.str();
  return o;
}

Outcome dispatch(RunConfig& c) {
  if (c.command == "verify-manifold") return verify_manifold(c);
  if (c.command == "check-separation") return check_separation(c);
  if (c.command == "build") return build(c);
  if (c.command == "check-pseudomanifold") return check_pseudomanifold(c);
  if (c.command == "euler") return euler(c);
  if (c.command == "jordan") return jordan(c);
  if (c.command == "good-pair") return good_pair(c);
  if (c.command == "generate") return generate_cmd(c);
  if (c.command == "simple-points") return simple_points(c);
  throw UsageError("unknown command '" + c.command + "'");
}

json envelope(const RunConfig& c, const Outcome& o) {
  return json{{"tool", "digitop"},
              {"version", DIGITOP_VERSION},
              {"config", c.to_json()},
              {"verdict", verdict_name(o.code)},
              {"report", o.report}};
}

// Re-runs a saved report and checks that verdict, report and witnesses agree.
int replay(const RunConfig& cli, std::ostream& out, std::ostream& err) {
  std::ifstream f(cli.replay);
  if (!f) throw io::InputError("cannot open '" + cli.replay + "'");
  json saved;
  try {
    saved = json::parse(f);
  } catch (const json::parse_error& e) {
    throw io::InputError(cli.replay + ": " + e.what());
  }
  if (!saved.contains("config") || !saved.contains("report"))
    throw io::InputError(cli.replay + ": not a digitop report");
  RunConfig c = RunConfig::from_json(saved["config"]);
  if (c.command != cli.command)
    throw UsageError("report was written by '" + c.command + "', not '" + cli.command + "'");
  c.format = "json";
  const Outcome o = dispatch(c);
  const bool same = o.report == saved["report"] && verdict_name(o.code) == saved.value("verdict", "");
  const json j{{"replay", cli.replay},
               {"verdict", verdict_name(o.code)},
               {"report_matches", o.report == saved["report"]},
               {"witness_confirmed", o.replayed},
               {"reproduced", same && o.replayed}};
  out << j.dump(2) << '\n';
  if (!(same && o.replayed)) {
    err << "replay does not reproduce the saved verdict\n";
    return kFails;
  }
  return o.code;
}

void add_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--points", c.points, "point set file");
  sub->add_option("--alpha", c.alpha, "foreground adjacency: axis, full or custom:PATH")->capture_default_str();
  sub->add_option("--beta", c.beta, "background adjacency: axis, full or custom:PATH")->capture_default_str();
  sub->add_option("--n", c.n, "dimension (default: from the points)");
  sub->add_option("--margin", c.margin, "region margin around the set")->capture_default_str();
  sub->add_option("--N", c.N, "starting N for N-simple connectivity")->capture_default_str();
  sub->add_option("--budget", c.budget, "contraction move budget")->capture_default_str();
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "off"}))
      ->capture_default_str();
  sub->add_option("-o", c.output, "write the report here instead of stdout");
  sub->add_option("--replay", c.replay, "re-check a saved JSON report");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital manifolds, their complexes and the discrete Jordan-Brouwer theorem", "digitop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("digitop ") + DIGITOP_VERSION);
  RunConfig c;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify-manifold", "check the manifold properties"},
      {"check-separation", "check the separation property"},
      {"build", "build K(M) and K'(M)"},
      {"check-pseudomanifold", "check that K'(M) is a pseudomanifold"},
      {"euler", "Euler characteristics of K(M) and K'(M)"},
      {"jordan", "two complement components with common boundary"},
      {"good-pair", "decide whether (alpha, beta) is a good pair"},
      {"generate", "write a test set"},
      {"simple-points", "list the simple points of a set"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_options(sub, c);
    if (name == "generate") {
      sub->add_option("--kind", c.kind, "rect_boundary, box_surface or sphere_shell");
      sub->add_option("--size", c.size, "w h | w h d | r n");
    }
    sub->callback([&c, name = name] { c.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!c.replay.empty()) return replay(c, out, err);
    if (c.format == "off" && c.command != "build") throw UsageError("--format off is only for build");
    const Outcome o = dispatch(c);
    for (const auto& w : o.warnings) err << "warning: " << w << '\n';
    std::ofstream file;
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw io::InputError("cannot write '" + c.output + "'");
    }
    std::ostream& dest = c.output.empty() ? out : file;
    if (c.format == "json")
      dest << envelope(c, o).dump(2) << '\n';
    else
      dest << o.text;
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace digitop::cli
