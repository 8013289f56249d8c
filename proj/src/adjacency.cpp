#include "digitop/adjacency.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <tuple>

namespace digitop {

namespace {

std::vector<Translation> box_offsets(int n) {
  std::vector<Translation> out;
  Translation t(n);
  for (int a = 0; a < n; ++a) t[a] = -1;
  while (true) {
    if (!t.is_zero()) out.push_back(t);
    int a = n - 1;
    while (a >= 0 && t[a] == 1) t[a--] = -1;
    if (a < 0) break;
    ++t[a];
  }
  return out;
}

bool within_full(const Translation& t) {
  for (int v : t.coords())
    if (std::abs(v) > 1) return false;
  return !t.is_zero();
}

}  // namespace

AdjacencySpec::AdjacencySpec(int n, Kind kind, std::vector<Translation> offsets)
    : n_(n), kind_(kind), offsets_(std::move(offsets)) {
  std::sort(offsets_.begin(), offsets_.end());
  offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
}

AdjacencySpec AdjacencySpec::axis(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  std::vector<Translation> offs;
  for (int a = 0; a < n; ++a) {
    offs.push_back(unit_translation(n, a, -1));
    offs.push_back(unit_translation(n, a, +1));
  }
  return {n, Kind::axis, std::move(offs)};
}

AdjacencySpec AdjacencySpec::full(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  return {n, Kind::full, box_offsets(n)};
}

AdjacencySpec AdjacencySpec::custom(int n, std::vector<Translation> offsets) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  for (const auto& t : offsets) {
    if (t.dim() != n) throw std::invalid_argument("offset " + t.str() + " has wrong dimension");
    if (!within_full(t)) throw std::invalid_argument("offset " + t.str() + " is outside the 3^n box");
  }
  AdjacencySpec spec(n, Kind::custom, std::move(offsets));
  for (const auto& t : spec.offsets_)
    if (!spec.has_offset(-t)) throw std::invalid_argument("offsets not symmetric: missing " + (-t).str());
  for (int a = 0; a < n; ++a)
    if (!spec.has_offset(unit_translation(n, a, +1)))
      throw std::invalid_argument("offsets must contain every axis neighbour");
  if (spec.offsets_.size() == static_cast<std::size_t>(2 * n)) spec.kind_ = Kind::axis;
  if (spec.offsets_.size() == box_offsets(n).size()) spec.kind_ = Kind::full;
  return spec;
}

std::string AdjacencySpec::name() const {
  switch (kind_) {
    case Kind::axis: return "axis";
    case Kind::full: return "full";
    case Kind::custom: break;
  }
  return "custom";
}

bool AdjacencySpec::has_offset(const Translation& t) const {
  if (t.dim() != n_) return false;
  switch (kind_) {
    case Kind::full: return within_full(t);
    case Kind::axis: return is_generator(t);
    case Kind::custom: break;
  }
  return std::binary_search(offsets_.begin(), offsets_.end(), t);
}

bool AdjacencySpec::adjacent(const LatticePoint& p, const LatticePoint& q) const { return has_offset(q - p); }

AdjacencyPair::AdjacencyPair(AdjacencySpec a, AdjacencySpec b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.dim() != beta.dim()) throw std::invalid_argument("adjacency pair dimension mismatch");
}

Region::Region(LatticePoint l, LatticePoint h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo.dim() != hi.dim()) throw std::invalid_argument("region bounds dimension mismatch");
  for (int a = 0; a < lo.dim(); ++a)
    if (lo[a] > hi[a]) throw std::invalid_argument("region bounds out of order");
}

Region Region::around(const PointSet& m, int margin) {
  auto [lo, hi] = bounding_box(m);
  for (int a = 0; a < lo.dim(); ++a) {
    lo[a] -= margin;
    hi[a] += margin;
  }
  return {lo, hi};
}

bool Region::contains(const LatticePoint& p) const {
  if (p.dim() != lo.dim()) return false;
  for (int a = 0; a < p.dim(); ++a)
    if (p[a] < lo[a] || p[a] > hi[a]) return false;
  return true;
}

bool Region::on_boundary(const LatticePoint& p) const {
  for (int a = 0; a < p.dim(); ++a)
    if (p[a] == lo[a] || p[a] == hi[a]) return true;
  return false;
}

Region Region::shrunk(int by) const {
  LatticePoint l = lo, h = hi;
  for (int a = 0; a < l.dim(); ++a) {
    l[a] += by;
    h[a] -= by;
  }
  return {l, h};
}

std::size_t Region::size() const {
  std::size_t s = 1;
  for (int a = 0; a < lo.dim(); ++a) s *= static_cast<std::size_t>(hi[a] - lo[a] + 1);
  return s;
}

std::vector<LatticePoint> Region::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  LatticePoint p = lo;
  while (true) {
    out.push_back(p);
    int a = p.dim() - 1;
    while (a >= 0 && p[a] == hi[a]) {
      p[a] = lo[a];
      --a;
    }
    if (a < 0) break;
    ++p[a];
  }
  return out;
}

int ComponentLabeling::of(const LatticePoint& p) const {
  auto it = id.find(p);
  return it == id.end() ? -1 : it->second;
}

std::vector<LatticePoint> neighbors(const AdjacencySpec& spec, const LatticePoint& p) {
  if (p.dim() != spec.dim()) throw std::invalid_argument("point dimension mismatch");
  std::vector<LatticePoint> out;
  out.reserve(spec.offsets().size());
  for (const auto& t : spec.offsets()) out.push_back(p + t);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Flood fill of `s` visiting points in sorted order so ids follow the
// smallest member of each component.
ComponentLabeling label(const AdjacencySpec& spec, const PointSet& s) {
  ComponentLabeling out;
  std::deque<LatticePoint> queue;
  for (const auto& start : s) {
    if (out.id.count(start)) continue;
    const int cid = out.count();
    out.members.emplace_back();
    out.infinite.push_back(false);
    out.id[start] = cid;
    queue.push_back(start);
    while (!queue.empty()) {
      LatticePoint p = queue.front();
      queue.pop_front();
      out.members[cid].push_back(p);
      for (const auto& t : spec.offsets()) {
        LatticePoint q = p + t;
        if (!s.count(q) || out.id.count(q)) continue;
        out.id[q] = cid;
        queue.push_back(q);
      }
    }
    std::sort(out.members[cid].begin(), out.members[cid].end());
  }
  return out;
}

}  // namespace

ComponentLabeling components(const AdjacencySpec& spec, const PointSet& s) { return label(spec, s); }

ComponentLabeling components(const AdjacencySpec& spec, std::span<const LatticePoint> s) {
  return label(spec, PointSet(s.begin(), s.end()));
}

ComponentLabeling complement_components(const AdjacencySpec& spec, const PointSet& m, const Region& r) {
  const Region inner = r.shrunk(1);
  for (const auto& p : m)
    if (!inner.contains(p)) throw std::invalid_argument("region too small: " + p.str() + " touches the margin");

  PointSet free;
  for (auto& p : r.points())
    if (!m.count(p)) free.insert(std::move(p));
  ComponentLabeling raw = label(spec, free);

  std::vector<bool> touches(raw.count(), false);
  for (int c = 0; c < raw.count(); ++c)
    for (const auto& p : raw.members[c])
      if (r.on_boundary(p)) {
        touches[c] = true;
        break;
      }

  // Merge boundary components and renumber by smallest member.
  std::vector<std::pair<LatticePoint, std::vector<int>>> groups;
  std::vector<int> merged;
  for (int c = 0; c < raw.count(); ++c) {
    if (touches[c])
      merged.push_back(c);
    else
      groups.push_back({raw.members[c].front(), {c}});
  }
  if (!merged.empty()) groups.push_back({raw.members[merged.front()].front(), merged});
  std::sort(groups.begin(), groups.end());

  ComponentLabeling out;
  for (const auto& [smallest, parts] : groups) {
    const int cid = out.count();
    out.members.emplace_back();
    out.infinite.push_back(touches[parts.front()]);
    for (int c : parts)
      for (const auto& p : raw.members[c]) {
        out.members[cid].push_back(p);
        out.id[p] = cid;
      }
    std::sort(out.members[cid].begin(), out.members[cid].end());
  }
  return out;
}

bool is_path(const AdjacencySpec& spec, std::span<const LatticePoint> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!spec.adjacent(seq[i - 1], seq[i])) return false;
  return true;
}

bool elementary_equivalent(std::span<const LatticePoint> w, std::span<const LatticePoint> w2, int N) {
  const std::size_t shortest = std::min(w.size(), w2.size());
  std::size_t prefix = 0;
  while (prefix < shortest && w[prefix] == w2[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < shortest && w[w.size() - 1 - suffix] == w2[w2.size() - 1 - suffix]) ++suffix;
  for (std::size_t p = 0; p <= prefix; ++p)
    for (std::size_t s = 0; s <= suffix && p + s <= shortest; ++s) {
      const std::size_t k = w.size() - p - s;
      const std::size_t k2 = w2.size() - p - s;
      if (k + k2 >= 1 && k + k2 <= static_cast<std::size_t>(N) + 2) return true;
    }
  return false;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::unknown: break;
  }
  return "unknown";
}

namespace {

using NeighborMap = std::map<LatticePoint, std::vector<LatticePoint>>;

NeighborMap induced_graph(const AdjacencySpec& spec, const PointSet& s) {
  NeighborMap g;
  for (const auto& p : s) {
    auto& adj = g[p];
    for (auto& q : neighbors(spec, p))
      if (s.count(q)) adj.push_back(std::move(q));
  }
  return g;
}

// Best-first search over elementary rewrites of one closed path.
bool contract(const NeighborMap& g, const Path& cycle, int N, std::size_t budget, std::size_t& used) {
  const LatticePoint base = cycle.front();
  const std::size_t cap = cycle.size() + 2;
  using Entry = std::tuple<std::size_t, std::size_t, Path>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::set<Path> seen;
  std::size_t order = 0;
  open.emplace(cycle.size(), order++, cycle);
  seen.insert(cycle);

  Path middle;
  while (!open.empty()) {
    if (used >= budget) return false;
    Path w = std::get<2>(open.top());
    open.pop();
    ++used;
    if (w.size() == 1) return true;
    const std::size_t L = w.size();

    for (std::size_t p = 0; p <= L; ++p)
      for (std::size_t k = 0; p + k <= L; ++k) {
        if (k > static_cast<std::size_t>(N) + 2) break;
        const std::size_t s_len = L - p - k;
        const std::size_t max_n = static_cast<std::size_t>(N) + 2 - k;
        for (std::size_t n2 = (k == 0 ? 1 : 0); n2 <= max_n; ++n2) {
          const std::size_t new_len = p + n2 + s_len;
          if (new_len == 0 || new_len > cap) continue;
          const LatticePoint* before = p > 0 ? &w[p - 1] : nullptr;
          const LatticePoint* after = s_len > 0 ? &w[p + k] : nullptr;

          // Enumerate replacement runs of length n2 by depth-first search.
          std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
            if (depth == n2) {
              if (n2 > 0 && after && !std::binary_search(g.at(middle.back()).begin(), g.at(middle.back()).end(), *after))
                return false;
              if (n2 == 0 && before && after &&
                  !std::binary_search(g.at(*before).begin(), g.at(*before).end(), *after))
                return false;
              Path r;
              r.reserve(new_len);
              r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
              r.insert(r.end(), middle.begin(), middle.end());
              r.insert(r.end(), w.begin() + static_cast<std::ptrdiff_t>(p + k), w.end());
              if (r.front() != base || r.back() != base || r == w) return false;
              if (r.size() == 1) return true;
              if (seen.insert(r).second) open.emplace(r.size(), order++, std::move(r));
              return false;
            }
            const std::vector<LatticePoint>* choices = nullptr;
            if (depth == 0) {
              if (before) choices = &g.at(*before);
            } else {
              choices = &g.at(middle.back());
            }
            if (choices) {
              for (const auto& x : *choices) {
                middle.push_back(x);
                const bool done = extend(depth + 1);
                middle.pop_back();
                if (done) return true;
              }
            } else {
              for (const auto& [x, adj] : g) {
                middle.push_back(x);
                const bool done = extend(depth + 1);
                middle.pop_back();
                if (done) return true;
              }
            }
            return false;
          };
          middle.clear();
          if (extend(0)) return true;
        }
      }
  }
  return false;
}

}  // namespace

std::vector<Path> generator_cycles(const AdjacencySpec& spec, const PointSet& s) {
  if (s.empty()) return {};
  const NeighborMap g = induced_graph(spec, s);
  const LatticePoint base = *s.begin();
  std::map<LatticePoint, LatticePoint> parent;
  parent.emplace(base, base);
  std::deque<LatticePoint> queue{base};
  while (!queue.empty()) {
    LatticePoint p = queue.front();
    queue.pop_front();
    for (const auto& q : g.at(p))
      if (parent.emplace(q, p).second) queue.push_back(q);
  }
  if (parent.size() != s.size()) throw std::invalid_argument("set is not connected under the adjacency");

  auto to_root = [&](LatticePoint p) {
    Path out{p};
    while (p != base) {
      p = parent.at(p);
      out.push_back(p);
    }
    return out;
  };

  std::vector<Path> cycles;
  for (const auto& [u, adj] : g)
    for (const auto& v : adj) {
      if (!(u < v) || parent.at(v) == u || parent.at(u) == v) continue;
      Path up = to_root(u);
      std::reverse(up.begin(), up.end());
      Path down = to_root(v);
      up.insert(up.end(), down.begin(), down.end());
      cycles.push_back(std::move(up));
    }
  return cycles;
}

ContractionResult n_simply_connected_bounded(const AdjacencySpec& spec, const PointSet& s, int N,
                                             std::size_t budget) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  ContractionResult out;
  const std::vector<Path> cycles = generator_cycles(spec, s);
  out.generators = static_cast<int>(cycles.size());
  const NeighborMap g = induced_graph(spec, s);
  for (const auto& c : cycles) {
    if (!contract(g, c, N, budget, out.moves)) {
      out.verdict = Decision::unknown;
      out.stuck = c;
      return out;
    }
  }
  out.verdict = Decision::yes;
  return out;
}

}  // namespace digitop
