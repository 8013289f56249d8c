#include "digitop/complex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>

#include "digitop/exact.hpp"
#include "digitop/separation.hpp"

namespace digitop {

Simplex::Simplex(std::vector<HalfPoint> v) : vertices(std::move(v)) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("simplex with repeated vertex");
}

bool Simplex::has_vertex(const HalfPoint& h) const { return std::binary_search(vertices.begin(), vertices.end(), h); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(), vertices.end());
}

std::string Simplex::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += " ";
    s += vertices[i].str();
  }
  return s + "]";
}

void SimplicialComplex::insert_with_faces(const Simplex& s) {
  if (!simplices.insert(s).second) return;
  if (s.vertices.size() == 1) return;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    std::vector<HalfPoint> f = s.vertices;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    insert_with_faces(Simplex(std::move(f)));
  }
}

std::vector<HalfPoint> SimplicialComplex::vertices() const {
  std::vector<HalfPoint> out;
  for (const auto& s : simplices)
    if (s.dim() == 0) out.push_back(s.vertices.front());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& s : simplices) {
    if (static_cast<int>(f.size()) <= s.dim()) f.resize(s.dim() + 1, 0);
    ++f[s.dim()];
  }
  return f;
}

int SimplicialComplex::dimension() const { return static_cast<int>(f_vector().size()) - 1; }

std::vector<Simplex> SimplicialComplex::of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices)
    if (s.dim() == d) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal() const {
  // A simplex is maximal iff no one-vertex extension is present.
  std::set<Simplex> covered;
  for (const auto& s : simplices) {
    for (std::size_t i = 0; i < s.vertices.size() && s.vertices.size() > 1; ++i) {
      std::vector<HalfPoint> f = s.vertices;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      covered.insert(Simplex(std::move(f)));
    }
  }
  std::vector<Simplex> out;
  for (const auto& s : simplices)
    if (!covered.count(s)) out.push_back(s);
  return out;
}

bool test_T(const Cube& c, const PointSet& m, const AdjacencyPair& pair) {
  if (c.dim() < 1) throw std::invalid_argument("T(C) needs a cube of dimension >= 1");
  const std::vector<LatticePoint> verts = cube_vertices(c);
  bool all_in = true;
  for (const auto& p : verts) {
    const bool in = m.count(p) > 0;
    all_in = all_in && in;
    const LatticePoint q = antipode(c, p);
    if (!(p < q)) continue;
    const bool q_in = m.count(q) > 0;
    if (in && q_in && pair.alpha.adjacent(p, q)) return true;
    if (!in && !q_in && !pair.beta.adjacent(p, q)) return true;
  }
  return all_in && c.dim() >= 2;
}

bool contributes(const Cube& c, const PointSet& m, const AdjacencyPair& pair) {
  if (c.dim() == 0) return m.count(c.base()) > 0;
  return !cube_intersection(c, m).empty() && test_T(c, m, pair);
}

namespace {

bool inside_hull(const Simplex& s, const Cube& c) {
  const LatticePoint top = c.top();
  for (const auto& v : s.vertices)
    for (int a = 0; a < v.dim(); ++a)
      if (v[a] < 2 * c.base()[a] || v[a] > 2 * top[a]) return false;
  return true;
}

}  // namespace

SimplicialComplex build_complex_in_cube(const Cube& cn, const PointSet& m, const AdjacencyPair& pair) {
  SimplicialComplex k;
  k.n = pair.dim();
  for (int d = 0; d <= cn.dim(); ++d) {
    for (const auto& c : subcubes(cn, d)) {
      if (!contributes(c, m, pair)) continue;
      const HalfPoint h = barycenter(c);
      std::vector<Simplex> cone{Simplex({h})};
      for (const auto& s : k.simplices)
        if (!s.has_vertex(h) && inside_hull(s, c)) {
          std::vector<HalfPoint> v = s.vertices;
          v.push_back(h);
          cone.emplace_back(std::move(v));
        }
      k.simplices.insert(cone.begin(), cone.end());
      k.provenance.emplace(h, c);
    }
  }
  return k;
}

SimplicialComplex build_complex(const PointSet& m, const AdjacencyPair& pair) {
  SimplicialComplex k;
  k.n = pair.dim();
  if (m.empty()) return k;
  // n-cubes of the dilated box that miss m contribute nothing.
  for (const auto& cn : cubes_meeting(m, pair.dim())) {
    SimplicialComplex part = build_complex_in_cube(cn, m, pair);
    k.simplices.insert(part.simplices.begin(), part.simplices.end());
    k.provenance.insert(part.provenance.begin(), part.provenance.end());
  }
  return k;
}

std::vector<CubeRecord> build_trace(const PointSet& m, const AdjacencyPair& pair) {
  std::vector<CubeRecord> out;
  for (int d = 1; d <= pair.dim(); ++d)
    for (const auto& c : cubes_meeting(m, d)) {
      CubeRecord r{c};
      r.test = test_T(c, m, pair);
      r.vertex = r.test;
      r.components = cube_complement_components(c, m, pair.beta).count();
      r.removed = r.vertex && r.components == 1;
      out.push_back(r);
    }
  return out;
}

SimplicialComplex reduce_complex(const SimplicialComplex& k, const PointSet& m, const AdjacencyPair& pair) {
  std::set<HalfPoint> dropped;
  for (const auto& [h, c] : k.provenance)
    if (c.dim() >= 1 && cube_complement_components(c, m, pair.beta).count() == 1) dropped.insert(h);
  SimplicialComplex out;
  out.n = k.n;
  for (const auto& s : k.simplices)
    if (std::none_of(s.vertices.begin(), s.vertices.end(), [&](const HalfPoint& h) { return dropped.count(h) > 0; }))
      out.simplices.insert(s);
  for (const auto& [h, c] : k.provenance)
    if (!dropped.count(h)) out.provenance.emplace(h, c);
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("DIGITOP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs check(i) for i in [0, count) on a few threads and returns the smallest
// index for which it fails, or count.
std::size_t first_failure(std::size_t count, const std::function<bool(std::size_t)>& check) {
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / 64));
  std::atomic<std::size_t> best{count};
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < count && i < best.load(); i += workers)
      if (!check(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
  };
  if (workers <= 1) {
    run(0);
    return best;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
  return best;
}

struct Box {
  std::vector<int> lo, hi;
};

Box box_of(const Simplex& s) {
  const int n = s.vertices.front().dim();
  Box b{std::vector<int>(n, std::numeric_limits<int>::max()), std::vector<int>(n, std::numeric_limits<int>::min())};
  for (const auto& v : s.vertices)
    for (int a = 0; a < n; ++a) b.lo[a] = std::min(b.lo[a], v[a]), b.hi[a] = std::max(b.hi[a], v[a]);
  return b;
}

// The open simplex lies strictly inside its box along every axis of positive
// extent and on the box along the others.
bool open_boxes_meet(const Box& x, const Box& y) {
  for (std::size_t a = 0; a < x.lo.size(); ++a) {
    const bool xo = x.lo[a] < x.hi[a], yo = y.lo[a] < y.hi[a];
    if (xo && yo) {
      if (std::max(x.lo[a], y.lo[a]) >= std::min(x.hi[a], y.hi[a])) return false;
    } else if (xo) {
      if (!(x.lo[a] < y.lo[a] && y.lo[a] < x.hi[a])) return false;
    } else if (yo) {
      if (!(y.lo[a] < x.lo[a] && x.lo[a] < y.hi[a])) return false;
    } else if (x.lo[a] != y.lo[a]) {
      return false;
    }
  }
  return true;
}

}  // namespace

AxiomReport verify_complex_axioms(const SimplicialComplex& k) {
  AxiomReport rep;
  const std::vector<Simplex> all(k.simplices.begin(), k.simplices.end());

  std::size_t bad = first_failure(all.size(), [&](std::size_t i) { return exact::affinely_independent(all[i].vertices); });
  if (bad < all.size()) {
    rep = {false, "independence", all[bad], std::nullopt};
    return rep;
  }
  for (const auto& s : all) {
    if (s.vertices.size() < 2) continue;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      std::vector<HalfPoint> f = s.vertices;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      Simplex face(std::move(f));
      if (!k.simplices.count(face)) return {false, "faces", s, face};
    }
  }

  // Candidate pairs: open boxes meet and neither vertex set contains the other.
  std::vector<Box> boxes;
  for (const auto& s : all) boxes.push_back(box_of(s));
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].lo[0] < boxes[b].lo[0]; });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < order.size(); ++x)
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const std::size_t i = order[x], j = order[y];
      if (boxes[j].lo[0] > boxes[i].hi[0]) break;
      if (!open_boxes_meet(boxes[i], boxes[j])) continue;
      if (all[i].is_face_of(all[j]) || all[j].is_face_of(all[i])) continue;
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  std::sort(pairs.begin(), pairs.end());
  bad = first_failure(pairs.size(), [&](std::size_t p) {
    const auto& [i, j] = pairs[p];
    return !exact::simplices_meet(all[i].vertices, true, all[j].vertices, true);
  });
  if (bad < pairs.size()) return {false, "disjointness", all[pairs[bad].first], all[pairs[bad].second]};
  return rep;
}

int euler_characteristic(const SimplicialComplex& k) {
  int chi = 0;
  for (const auto& s : k.simplices) chi += s.dim() % 2 == 0 ? 1 : -1;
  return chi;
}

std::vector<std::vector<HalfPoint>> skeleton_components(const SimplicialComplex& k) {
  const std::vector<HalfPoint> verts = k.vertices();
  std::map<HalfPoint, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& s : k.simplices)
    if (s.dim() == 1) parent[find(index.at(s.vertices[0]))] = find(index.at(s.vertices[1]));
  std::map<std::size_t, std::vector<HalfPoint>> groups;
  for (std::size_t i = 0; i < verts.size(); ++i) groups[find(i)].push_back(verts[i]);
  std::vector<std::vector<HalfPoint>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

CorrespondenceReport check_lattice_correspondence(const SimplicialComplex& k, const PointSet& m) {
  PointSet lattice;
  for (const auto& h : k.vertices())
    if (is_lattice(h)) lattice.insert(to_lattice(h));
  if (lattice != m) {
    CorrespondenceReport r;
    r.ok = false;
    r.note = "lattice vertices differ from the set";
    for (const auto& p : m)
      if (!lattice.count(p)) return r.point = to_half(p), r;
    for (const auto& p : lattice)
      if (!m.count(p)) return r.point = to_half(p), r;
  }
  for (const auto& s : k.maximal()) {
    if (s.dim() < 1) continue;
    const Box b = box_of(s);
    // Lattice points of the closed box: even doubled coordinates.
    const int n = static_cast<int>(b.lo.size());
    HalfPoint p(n);
    std::function<std::optional<HalfPoint>(int)> scan = [&](int a) -> std::optional<HalfPoint> {
      if (a == n) {
        if (!s.has_vertex(p) && exact::point_in_closed_simplex(p, s.vertices)) return p;
        return std::nullopt;
      }
      int start = b.lo[a] % 2 == 0 ? b.lo[a] : b.lo[a] + 1;
      for (int x = start; x <= b.hi[a]; x += 2) {
        p[a] = x;
        if (auto hit = scan(a + 1)) return hit;
      }
      return std::nullopt;
    };
    if (auto hit = scan(0)) return {false, "simplex passes through a lattice point", hit, s};
  }
  return {};
}

ChamberReport complement_chambers(const SimplicialComplex& k, const PointSet& m, const AdjacencySpec& beta,
                                  const Region& r) {
  const int n = r.lo.dim();
  std::vector<int> lo(n), ext(n);
  std::size_t total = 1;
  for (int a = 0; a < n; ++a) {
    lo[a] = 2 * r.lo[a];
    ext[a] = 2 * (r.hi[a] - r.lo[a]) + 1;
    total *= static_cast<std::size_t>(ext[a]);
  }
  auto encode = [&](const HalfPoint& h) {
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a) idx = idx * ext[a] + static_cast<std::size_t>(h[a] - lo[a]);
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    HalfPoint h(n);
    for (int a = n - 1; a >= 0; --a) {
      h[a] = static_cast<int>(idx % ext[a]) + lo[a];
      idx /= ext[a];
    }
    return h;
  };
  auto in_grid = [&](const HalfPoint& h) {
    for (int a = 0; a < n; ++a)
      if (h[a] < lo[a] || h[a] >= lo[a] + ext[a]) return false;
    return true;
  };

  // Bucket maximal simplices by the grid points of their closed boxes.
  const std::vector<Simplex> maxi = k.maximal();
  std::map<std::size_t, std::vector<std::size_t>> bucket;
  for (std::size_t i = 0; i < maxi.size(); ++i) {
    const Box b = box_of(maxi[i]);
    HalfPoint p(n);
    std::function<void(int)> fill = [&](int a) {
      if (a == n) {
        if (in_grid(p)) bucket[encode(p)].push_back(i);
        return;
      }
      for (int x = b.lo[a]; x <= b.hi[a]; ++x) p[a] = x, fill(a + 1);
    };
    fill(0);
  }
  auto candidates = [&](std::size_t idx) -> const std::vector<std::size_t>* {
    auto it = bucket.find(idx);
    return it == bucket.end() ? nullptr : &it->second;
  };

  std::vector<char> blocked(total, 0);
  for (const auto& [idx, list] : bucket) {
    const HalfPoint h = decode(idx);
    for (std::size_t i : list)
      if (exact::point_in_closed_simplex(h, maxi[i].vertices)) {
        blocked[idx] = 1;
        break;
      }
  }

  std::vector<int> label(total, -1);
  int count = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (blocked[start] || label[start] >= 0) continue;
    label[start] = count;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      const HalfPoint h = decode(cur);
      for (int a = 0; a < n; ++a)
        for (int d : {-1, 1}) {
          HalfPoint g = h;
          g[a] += d;
          if (!in_grid(g)) continue;
          const std::size_t gi = encode(g);
          if (blocked[gi] || label[gi] >= 0) continue;
          bool crossing = false;
          const std::vector<HalfPoint> seg{h, g};
          for (const auto* list : {candidates(cur), candidates(gi)}) {
            if (!list) continue;
            for (std::size_t i : *list)
              if (exact::simplices_meet(seg, false, maxi[i].vertices, false)) {
                crossing = true;
                break;
              }
            if (crossing) break;
          }
          if (crossing) continue;
          label[gi] = count;
          queue.push_back(gi);
        }
    }
    ++count;
  }

  ChamberReport rep;
  std::set<int> used;
  for (const auto& p : r.points()) {
    if (m.count(p)) continue;
    const int id = label[encode(to_half(p))];
    rep.of[p] = id;
    used.insert(id);
  }
  rep.chambers = static_cast<int>(used.size());
  const ComponentLabeling comp = complement_components(beta, m, r);
  std::map<int, int> fwd, back;
  rep.matches_beta = true;
  for (const auto& [p, id] : rep.of) {
    const int b = comp.of(p);
    auto [f, fresh_f] = fwd.emplace(id, b);
    auto [g, fresh_g] = back.emplace(b, id);
    if (id < 0 || f->second != b || g->second != id) rep.matches_beta = false;
  }
  return rep;
}

SimplicialComplex translate(const SimplicialComplex& k, const Translation& t) {
  auto shift = [&](HalfPoint h) {
    for (int a = 0; a < h.dim(); ++a) h[a] += 2 * t[a];
    return h;
  };
  SimplicialComplex out;
  out.n = k.n;
  for (const auto& s : k.simplices) {
    std::vector<HalfPoint> v;
    for (const auto& h : s.vertices) v.push_back(shift(h));
    out.simplices.insert(Simplex(std::move(v)));
  }
  for (const auto& [h, c] : k.provenance) out.provenance.emplace(shift(h), digitop::translate(c, t));
  return out;
}

}  // namespace digitop
