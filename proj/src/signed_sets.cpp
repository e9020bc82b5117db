#include "permideal/signed_sets.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <thread>

#include "permideal/errors.hpp"

namespace permideal {

LatticeTables::LatticeTables(Shape shape) : shape_(std::move(shape)) {
  const std::size_t N = shape_.size();
  if (N > kMaxPoints) throw CapExceeded("point sets are limited to 64 points", kMaxPoints);
  full_ = N == 64 ? ~PointSet{0} : bit(N) - 1;
  neighbors_.assign(N, 0);
  dist_.assign(N * N, 0);
  const auto& pts = shape_.points();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int d = distance(pts[i], pts[j]);
      dist_[i * N + j] = d;
      if (d == 1) neighbors_[i] |= bit(j);
    }

  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (dist(i, j) != 2) continue;
      for (int ax : t_distance(shape_.t(), pts[i], pts[j]).axes.axes()) {
        PointSet need = bit(shape_.index(switch_point({ax}, pts[i], pts[j]))) |
                        bit(shape_.index(switch_point({ax}, pts[j], pts[i])));
        requirements_.push_back({bit(i) | bit(j), need, i, j, ax});
      }
    }

  const int n = shape_.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || (i > shape_.t() && j > shape_.t())) continue;
      // axis i takes two values, axis j three
      const int ri = shape_.radix(i), rj = shape_.radix(j);
      if (ri < 2 || rj < 3) continue;
      for (const Point& base : pts) {
        if (base.on(i) != 1 || base.on(j) != 1) continue;
        for (int u1 = 1; u1 <= ri; ++u1)
          for (int u2 = u1 + 1; u2 <= ri; ++u2)
            for (int v1 = 1; v1 <= rj; ++v1)
              for (int v2 = v1 + 1; v2 <= rj; ++v2)
                for (int v3 = v2 + 1; v3 <= rj; ++v3) {
                  PointSet m = 0;
                  for (int u : {u1, u2})
                    for (int v : {v1, v2, v3}) {
                      Point p = base;
                      p.set(i, u);
                      p.set(j, v);
                      m |= bit(shape_.index(p));
                    }
                  obstructions_.push_back(m);
                }
      }
    }
  std::sort(obstructions_.begin(), obstructions_.end());
  obstructions_.erase(std::unique(obstructions_.begin(), obstructions_.end()), obstructions_.end());
}

PointSet LatticeTables::mask_of(const std::vector<Point>& points) const {
  PointSet m = 0;
  for (const Point& p : points) m |= bit(shape_.index(p));
  return m;
}

std::vector<Point> LatticeTables::points_of(PointSet s) const {
  std::vector<Point> out;
  for (std::size_t k : indices_of(s)) out.push_back(shape_.point(k));
  return out;
}

std::vector<std::size_t> LatticeTables::indices_of(PointSet s) const {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

std::optional<SwitchViolation> switchability_violation(const LatticeTables& tb, PointSet s) {
  for (const auto& r : tb.requirements())
    if ((s & r.pair) == r.pair && (s & r.needed) != r.needed)
      return SwitchViolation{tb.shape().point(r.a), tb.shape().point(r.b), r.axis};
  return std::nullopt;
}

bool is_t_switchable(const LatticeTables& tb, PointSet s) {
  for (const auto& r : tb.requirements())
    if ((s & r.pair) == r.pair && (s & r.needed) != r.needed) return false;
  return true;
}

PointSet switchable_closure(const LatticeTables& tb, PointSet u) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : tb.requirements())
      if ((u & r.pair) == r.pair && (u & r.needed) != r.needed) {
        u |= r.needed;
        changed = true;
      }
  }
  return u;
}

std::vector<PointSet> components(const LatticeTables& tb, PointSet s) {
  std::vector<PointSet> out;
  PointSet rest = s;
  while (rest) {
    PointSet comp = rest & (~rest + 1);
    PointSet frontier = comp;
    while (frontier) {
      PointSet next = 0;
      for (std::size_t k : tb.indices_of(frontier)) next |= tb.neighbors(k);
      next &= s & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

std::vector<int> bfs_distances(const LatticeTables& tb, PointSet s, std::size_t src) {
  std::vector<int> d(tb.size(), -1);
  if (!has(s, src)) return d;
  d[src] = 0;
  PointSet seen = bit(src), frontier = bit(src);
  for (int depth = 1; frontier; ++depth) {
    PointSet next = 0;
    for (std::size_t k : tb.indices_of(frontier)) next |= tb.neighbors(k);
    next &= s & ~seen;
    for (std::size_t k : tb.indices_of(next)) d[k] = depth;
    seen |= next;
    frontier = next;
  }
  return d;
}

int path_length(const LatticeTables& tb, PointSet s, std::size_t a, std::size_t b) {
  if (!has(s, a) || !has(s, b)) throw NotConnected("point is not in the set");
  int d = bfs_distances(tb, s, a)[b];
  if (d < 0)
    throw NotConnected(format_point(tb.shape().point(a)) + " and " + format_point(tb.shape().point(b)) +
                       " are not connected");
  return d;
}

int path_length(const LatticeTables& tb, PointSet s, const Point& a, const Point& b) {
  return path_length(tb, s, tb.shape().index(a), tb.shape().index(b));
}

const char* to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::CONST_HEAD: return "CONST_HEAD";
    case ComponentTag::NEAR_SINGLETON: return "NEAR_SINGLETON";
    case ComponentTag::PARITY_CONSISTENT: return "PARITY_CONSISTENT";
    case ComponentTag::NOT_SIGNED: return "NOT_SIGNED";
  }
  return "?";
}

namespace {

bool constant_head(const LatticeTables& tb, const std::vector<std::size_t>& idx) {
  const int t = tb.shape().t();
  const Point& first = tb.shape().point(idx.front());
  for (std::size_t k : idx)
    for (int i = 1; i <= t; ++i)
      if (tb.shape().point(k).on(i) != first.on(i)) return false;
  return true;
}

bool near_singleton(const LatticeTables& tb, const std::vector<std::size_t>& idx) {
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if (tb.dist(idx[x], idx[y]) > 1) return false;
  return true;
}

// Two-colours the component; returns an odd closed walk when that fails.
std::vector<std::size_t> odd_walk(const LatticeTables& tb, PointSet comp, std::size_t root) {
  std::vector<int> depth(tb.size(), -1);
  std::vector<std::size_t> parent(tb.size(), root);
  std::deque<std::size_t> queue{root};
  depth[root] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : tb.indices_of(tb.neighbors(u) & comp)) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      } else if (depth[v] == depth[u]) {
        std::vector<std::size_t> up, down;
        for (std::size_t w = u; w != root; w = parent[w]) up.push_back(w);
        for (std::size_t w = v; w != root; w = parent[w]) down.push_back(w);
        std::vector<std::size_t> walk{root};
        walk.insert(walk.end(), up.rbegin(), up.rend());
        walk.insert(walk.end(), down.begin(), down.end());
        walk.push_back(root);
        return walk;
      }
    }
  }
  return {};
}

}  // namespace

bool SignedClassification::is_t_signed() const {
  if (violation) return false;
  return std::none_of(components.begin(), components.end(),
                      [](const ComponentClass& c) { return c.tag == ComponentTag::NOT_SIGNED; });
}

std::string SignedClassification::witness(const Shape& shape) const {
  if (violation)
    return "not switchable: s(" + std::to_string(violation->axis) + "," + format_point(violation->a) + "," +
           format_point(violation->b) + ") or its partner is missing";
  for (const auto& c : components) {
    if (c.tag != ComponentTag::NOT_SIGNED) continue;
    std::string s = "odd closed walk";
    for (std::size_t k : c.odd_walk) s += " " + format_point(shape.point(k));
    return s;
  }
  return "";
}

SignedClassification classify_signed(const LatticeTables& tb, PointSet s) {
  SignedClassification out;
  out.violation = switchability_violation(tb, s);
  for (PointSet comp : components(tb, s)) {
    ComponentClass cc;
    cc.members = comp;
    auto idx = tb.indices_of(comp);
    if (constant_head(tb, idx)) {
      cc.tag = ComponentTag::CONST_HEAD;
    } else if (near_singleton(tb, idx)) {
      cc.tag = ComponentTag::NEAR_SINGLETON;
    } else {
      cc.odd_walk = odd_walk(tb, comp, idx.front());
      cc.tag = cc.odd_walk.empty() ? ComponentTag::PARITY_CONSISTENT : ComponentTag::NOT_SIGNED;
    }
    out.components.push_back(std::move(cc));
  }
  return out;
}

bool is_t_signed(const LatticeTables& tb, PointSet s) {
  if (!is_t_switchable(tb, s)) return false;
  for (PointSet comp : components(tb, s)) {
    auto idx = tb.indices_of(comp);
    if (constant_head(tb, idx) || near_singleton(tb, idx)) continue;
    if (!odd_walk(tb, comp, idx.front()).empty()) return false;
  }
  return true;
}

bool is_subset_of_signed(const LatticeTables& tb, PointSet u) {
  PointSet c = switchable_closure(tb, u);
  return std::none_of(tb.obstructions().begin(), tb.obstructions().end(),
                      [c](PointSet g) { return (c & g) == g; });
}

bool is_subset_of_signed_direct(PointSet u, const std::vector<PointSet>& signed_sets) {
  return std::any_of(signed_sets.begin(), signed_sets.end(), [u](PointSet s) { return (u & s) == u; });
}

std::vector<PointSet> enumerate_t_signed(const LatticeTables& tb, std::size_t cap_points, unsigned threads) {
  if (tb.size() > cap_points) throw CapExceeded("subset enumeration refused for " + std::to_string(tb.size()) + " points", cap_points);
  if (tb.size() >= 63) throw CapExceeded("subset enumeration refused", 62);
  const PointSet total = bit(tb.size());
  threads = std::max(1u, threads);
  std::vector<std::vector<PointSet>> parts(threads);
  auto work = [&](unsigned w) {
    const PointSet lo = total / threads * w;
    const PointSet hi = w + 1 == threads ? total : total / threads * (w + 1);
    for (PointSet s = lo; s < hi; ++s)
      if (is_t_signed(tb, s)) parts[w].push_back(s);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<PointSet> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<PointSet> set_maximal(const std::vector<PointSet>& sets) {
  std::vector<PointSet> out;
  for (PointSet s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [s](PointSet u) { return u != s && (s & u) == s; });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_set(const LatticeTables& tb, PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k : tb.indices_of(s)) {
    if (!first) out += ",";
    first = false;
    out += format_point(tb.shape().point(k));
  }
  return out + "}";
}

}  // namespace permideal
