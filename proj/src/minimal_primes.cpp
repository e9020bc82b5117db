#include "permideal/minimal_primes.hpp"

#include <algorithm>
#include <bit>

#include "permideal/errors.hpp"

namespace permideal {

const char* to_string(IdealKind k) {
  switch (k) {
    case IdealKind::J: return "cj";
    case IdealKind::Jhat: return "hatj";
    case IdealKind::Jcheck: return "checkj";
  }
  return "?";
}

namespace {

bool larger_first(PointSet a, PointSet b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa > pb : a < b;
}

}  // namespace

std::vector<PointSet> minimal_Q_sets(const LatticeTables& tb, std::vector<PointSet> candidates) {
  // Q_S in Q_T forces T in S, so a superset can only be beaten by a subset.
  // Processing by decreasing size, a set is minimal iff no minimal proper
  // superset found so far has its Q inside Q_S.
  std::sort(candidates.begin(), candidates.end(), larger_first);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  struct Found {
    PointSet set;
    IdealPresentation q;
  };
  std::vector<Found> found;
  for (PointSet s : candidates) {
    bool minimal = true;
    std::optional<SignedSet> ss;
    std::optional<Reducer> red;
    for (const Found& f : found) {
      if ((s & f.set) != s || s == f.set) continue;
      if (!red) {
        ss.emplace(tb, s);
        red.emplace(groebner_G(*ss));
      }
      bool inside = std::all_of(f.q.binomials.begin(), f.q.binomials.end(),
                                [&](const SignedBinomial& b) { return red->reduces_to_zero(b); });
      if (inside) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (!ss) ss.emplace(tb, s);
    found.push_back({s, Q_ideal(*ss)});
  }
  std::vector<PointSet> out;
  for (const auto& f : found) out.push_back(f.set);
  return out;
}

std::vector<PointSet> maximal_t_signed(const LatticeTables& tb, std::size_t cap_points, unsigned threads) {
  return minimal_Q_sets(tb, enumerate_t_signed(tb, cap_points, threads));
}

std::vector<PointSet> far_graph(const LatticeTables& tb) {
  const Shape& sh = tb.shape();
  std::vector<PointSet> adj(tb.size(), 0);
  for (std::size_t i = 0; i < tb.size(); ++i)
    for (std::size_t j = 0; j < tb.size(); ++j)
      if (tb.dist(i, j) == 3 && t_distance(sh.t(), sh.point(i), sh.point(j)).count == 3) adj[i] |= bit(j);
  return adj;
}

bool has_far_pair(const LatticeTables& tb, PointSet s) {
  auto adj = far_graph(tb);
  for (std::size_t k : tb.indices_of(s))
    if (adj[k] & s) return true;
  return false;
}

namespace {

// Maximal cliques of the graph with adjacency comp (Tomita pivoting).
void bron_kerbosch(const std::vector<PointSet>& comp, PointSet R, PointSet P, PointSet X, std::vector<PointSet>& out) {
  if (!P && !X) {
    out.push_back(R);
    return;
  }
  PointSet PX = P | X;
  std::size_t pivot = static_cast<std::size_t>(std::countr_zero(PX));
  int best = -1;
  for (PointSet w = PX; w; w &= w - 1) {
    std::size_t u = static_cast<std::size_t>(std::countr_zero(w));
    int c = std::popcount(P & comp[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (PointSet w = P & ~comp[pivot]; w; w &= w - 1) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(w));
    bron_kerbosch(comp, R | bit(v), P & comp[v], X & comp[v], out);
    P &= ~bit(v);
    X |= bit(v);
  }
}

}  // namespace

std::vector<PointSet> far_independent_sets(const LatticeTables& tb) {
  auto adj = far_graph(tb);
  std::vector<PointSet> comp(tb.size());
  for (std::size_t i = 0; i < tb.size(); ++i) comp[i] = tb.full() & ~adj[i] & ~bit(i);
  std::vector<PointSet> out;
  bron_kerbosch(comp, 0, tb.full(), 0, out);
  std::sort(out.begin(), out.end(), larger_first);
  return out;
}

std::vector<PrimeComponent> minimal_primes(const LatticeTables& tb, IdealKind kind, std::size_t cap_points,
                                          unsigned threads) {
  std::vector<PrimeComponent> out;
  if (kind == IdealKind::Jhat) {
    if (tb.size() > cap_points) throw CapExceeded("independent-set enumeration refused", cap_points);
    for (PointSet s : far_independent_sets(tb)) out.push_back({s, variable_ideal(tb, s)});
    return out;
  }
  std::vector<PointSet> candidates = enumerate_t_signed(tb, cap_points, threads);
  if (kind == IdealKind::Jcheck) {
    auto adj = far_graph(tb);
    std::erase_if(candidates, [&](PointSet s) {
      for (std::size_t k : tb.indices_of(s))
        if (adj[k] & s) return true;
      return false;
    });
  }
  for (PointSet s : minimal_Q_sets(tb, std::move(candidates))) out.push_back({s, Q_ideal(SignedSet(tb, s))});
  return out;
}

}  // namespace permideal
