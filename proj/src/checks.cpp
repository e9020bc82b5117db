#include "permideal/checks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "permideal/errors.hpp"
#include "permideal/generators.hpp"
#include "permideal/groebner.hpp"
#include "permideal/prime_structure.hpp"

namespace permideal {

void CheckReport::fail(std::string what) {
  if (failures == 0) first_failure = std::move(what);
  ++failures;
}

std::string CheckReport::summary() const {
  std::string s = tag + ": " + std::to_string(checked) + " checked, " + std::to_string(failures) + " failed";
  if (failures) s += " (first: " + first_failure + ")";
  return s;
}

namespace {

std::vector<Point> component_points(const LatticeTables& tb, PointSet comp) { return tb.points_of(comp); }

std::string triple_text(const Point& a, const Point& b, const Point& c) {
  return format_point(a) + format_point(b) + format_point(c);
}

}  // namespace

CheckReport check_containment(const LatticeTables& tb, const std::vector<PointSet>& signed_sets) {
  CheckReport r{"containment"};
  const auto gens = slice_ideal(tb.shape(), FamilyKind::J_t).elements;
  for (PointSet s : signed_sets) {
    SignedSet ss(tb, s);
    Reducer red(groebner_G(ss));
    for (const auto& g : gens) {
      ++r.checked;
      if (!red.reduces_to_zero(g))
        r.fail(to_text(g.to_polynomial(), tb.shape()) + " not in Q of " + format_set(tb, s));
    }
  }
  return r;
}

namespace {

template <class ReduceFn>
CheckReport groebner_suite(const LatticeTables& tb, const std::vector<PointSet>& sets, std::string tag,
                           ReduceFn&& reduce_fn) {
  CheckReport r{std::move(tag)};
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    IdealPresentation g = groebner_G(ss);
    std::vector<Polynomial> polys;
    for (const auto& b : g.binomials) polys.push_back(b.to_polynomial());
    Reducer red(g.support, g.binomials);
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = i + 1; j < polys.size(); ++j) {
        ++r.checked;
        Polynomial sp = s_polynomial(polys[i], polys[j]);
        if (!reduce_fn(red, polys, sp).is_zero())
          r.fail("S(" + to_text(polys[i], tb.shape()) + ", " + to_text(polys[j], tb.shape()) + ") in " +
                 format_set(tb, s));
      }
  }
  return r;
}

}  // namespace

CheckReport check_groebner_combinatorial(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  return groebner_suite(tb, sets, "groebner-combinatorial",
                        [](const Reducer& red, const std::vector<Polynomial>&, const Polynomial& sp) {
                          return red.reduce(sp);
                        });
}

CheckReport check_groebner_oracle(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  return groebner_suite(tb, sets, "groebner-oracle",
                        [](const Reducer&, const std::vector<Polynomial>& polys, const Polynomial& sp) {
                          return reduce(sp, polys);
                        });
}

CheckReport check_h_well_defined(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  CheckReport r{"h-well-defined"};
  const Shape& sh = tb.shape();
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    auto idx = tb.indices_of(s);
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) {
        if (!ss.connected(idx[x], idx[y])) continue;
        const Point& a = sh.point(idx[x]);
        const Point& b = sh.point(idx[y]);
        const std::uint32_t D = t_distance(sh.t(), a, b).axes.bits();
        const int ipl = ss.ipl(a, b);
        std::map<Monomial, int> seen;
        for (std::uint32_t k = D;; k = (k - 1) & D) {
          AxisSet K = AxisSet::from_bits(k);
          Monomial m = monomial_of(sh, {switch_point(K, a, b), switch_point(K, b, a)});
          const int sign = (K.size() * ipl) % 2 == 0 ? 1 : -1;
          ++r.checked;
          auto [it, fresh] = seen.emplace(m, sign);
          if (!fresh && it->second != sign)
            r.fail("h for " + format_point(a) + format_point(b) + " depends on K in " + format_set(tb, s));
          if (k == 0) break;
        }
      }
  }
  return r;
}

CheckReport check_confluence(const LatticeTables& tb, const std::vector<PointSet>& sets, unsigned rounds,
                             std::uint64_t seed) {
  CheckReport r{"confluence"};
  const Shape& sh = tb.shape();
  std::mt19937_64 rng(seed);
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    Reducer red = reducer_for(ss);
    for (PointSet comp : components(tb, s)) {
      auto idx = tb.indices_of(comp);
      for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x; y < idx.size(); ++y)
          for (std::size_t z = y; z < idx.size(); ++z) {
            Monomial m = Monomial::product({static_cast<Var>(idx[x]), static_cast<Var>(idx[y]), static_cast<Var>(idx[z])});
            NormalForm base = red.normal_form(m);
            for (unsigned k = 0; k < rounds; ++k) {
              ++r.checked;
              if (!(red.normal_form(m, rng) == base)) {
                r.fail(to_text(m, sh) + " has order-dependent normal form in " + format_set(tb, s));
                break;
              }
            }
          }
    }
  }
  return r;
}

namespace {

template <class F>
void for_each_ordered_triple(const LatticeTables& tb, const std::vector<PointSet>& sets, F&& fn) {
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    Reducer red = reducer_for(ss);
    for (PointSet comp : components(tb, s)) {
      auto pts = component_points(tb, comp);
      for (const Point& a : pts)
        for (const Point& b : pts)
          for (const Point& c : pts) fn(ss, red, a, b, c);
    }
  }
}

std::array<Point, 3> as_triple(const Shape& sh, const Monomial& m) {
  auto p = points_of(sh, m);
  return {p.at(0), p.at(1), p.at(2)};
}

}  // namespace

CheckReport check_ledger_sign(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  CheckReport r{"sign-ledger"};
  const Shape& sh = tb.shape();
  for_each_ordered_triple(tb, sets, [&](const SignedSet& ss, const Reducer& red, const Point& a, const Point& b,
                                        const Point& c) {
    NormalForm nf = red.normal_form(monomial_of(sh, {a, b, c}));
    if (nf.zero) {
      r.fail("cubic " + triple_text(a, b, c) + " vanished");
      return;
    }
    auto matches = tail_matchings(sh, {a, b, c}, as_triple(sh, nf.monomial));
    if (matches.empty()) r.fail("no tail matching for " + triple_text(a, b, c));
    for (const auto& ABC : matches) {
      ++r.checked;
      try {
        SignLedger L = sign_ledger(ss, a, b, c, ABC[0], ABC[1], ABC[2]);
        if (L.sign() != nf.sign) r.fail("ledger sign differs for " + triple_text(a, b, c));
      } catch (const NotConnected& e) {
        r.fail(e.what());
      }
    }
  });
  return r;
}

CheckReport check_ledger_moves(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  CheckReport r{"sign-ledger-moves"};
  const Shape& sh = tb.shape();
  for_each_ordered_triple(tb, sets, [&](const SignedSet& ss, const Reducer& red, const Point& a, const Point& b,
                                        const Point& c) {
    NormalForm nf = red.normal_form(monomial_of(sh, {a, b, c}));
    if (nf.zero) return;
    for (const auto& ABC : tail_matchings(sh, {a, b, c}, as_triple(sh, nf.monomial))) {
      try {
        const int p = sign_ledger(ss, a, b, c, ABC[0], ABC[1], ABC[2]).p;
        for (int i = 1; i <= sh.t(); ++i) {
          AxisSet I{i};
          struct Move {
            bool applies;
            Point a, b, c;
            const Point *u, *v;
          };
          Move moves[3] = {
              {a.on(i) != b.on(i), switch_point(I, a, b), switch_point(I, b, a), c, &a, &b},
              {a.on(i) != c.on(i), switch_point(I, a, c), b, switch_point(I, c, a), &a, &c},
              {b.on(i) != c.on(i), a, switch_point(I, b, c), switch_point(I, c, b), &b, &c},
          };
          for (const Move& mv : moves) {
            if (!mv.applies) continue;
            ++r.checked;
            const int rr = ss.ipl(*mv.u, *mv.v);
            const int p2 = sign_ledger(ss, mv.a, mv.b, mv.c, ABC[0], ABC[1], ABC[2]).p;
            if ((p2 - p + rr) % 2 != 0) r.fail("move on axis " + std::to_string(i) + " at " + triple_text(a, b, c));
          }
        }
      } catch (const NotConnected& e) {
        r.fail(e.what());
      }
    }
  });
  return r;
}

CheckReport check_quadratic(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  CheckReport r{"quadratic-normal-form"};
  const Shape& sh = tb.shape();
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    Reducer red = reducer_for(ss);
    auto pts = tb.points_of(s);
    for (const Point& a : pts)
      for (const Point& b : pts) {
        ++r.checked;
        if (!(quad_normal_form(ss, a, b) == red.normal_form(monomial_of(sh, {a, b}))))
          r.fail("x" + format_point(a) + "x" + format_point(b) + " in " + format_set(tb, s));
        if (!ss.connected(a, b)) continue;
        const Point Mm = max_min(sh, a, b), mM = min_max(sh, a, b);
        const std::uint32_t T = sh.head_axes().bits();
        for (std::uint32_t k = T;; k = (k - 1) & T) {
          AxisSet K = AxisSet::from_bits(k);
          const Point aK = switch_point(K, a, b), bK = switch_point(K, b, a);
          ++r.checked;
          if (max_min(sh, aK, bK) != Mm || min_max(sh, aK, bK) != mM)
            r.fail("Mm/mM not switch-invariant at " + format_point(a) + format_point(b));
          if (k == 0) break;
        }
      }
  }
  return r;
}

CheckReport check_big_difference_parity(const LatticeTables& tb, const std::vector<PointSet>& sets) {
  CheckReport r{"big-difference-parity"};
  const Shape& sh = tb.shape();
  for (PointSet s : sets) {
    SignedSet ss(tb, s);
    auto pts = tb.points_of(s);
    for (const Point& a : pts)
      for (const Point& b : pts) {
        if (!ss.connected(a, b)) continue;
        const int ipl = ss.ipl(a, b);
        const int D = big_difference(sh, a, b).D;
        const std::uint32_t Dt = t_distance(sh.t(), a, b).axes.bits();
        for (std::uint32_t k = Dt;; k = (k - 1) & Dt) {
          AxisSet K = AxisSet::from_bits(k);
          const int DK = big_difference(sh, switch_point(K, a, b), switch_point(K, b, a)).D;
          ++r.checked;
          if (((K.size() + D) * ipl - DK * ipl) % 2 != 0)
            r.fail("parity at " + format_point(a) + format_point(b) + " in " + format_set(tb, s));
          if (k == 0) break;
        }
      }
  }
  return r;
}

CheckReport check_big_difference_symmetry(const Shape& shape) {
  CheckReport r{"big-difference-symmetry"};
  for (const Point& a : shape.points())
    for (const Point& b : shape.points()) {
      if (a == b || collapse(shape, a).tail == collapse(shape, b).tail) continue;
      ++r.checked;
      if (big_difference_formula(shape, a, b) != big_difference_formula(shape, b, a))
        r.fail("D" + format_point(a) + format_point(b) + " != D" + format_point(b) + format_point(a));
    }
  return r;
}

CheckReport check_syzygy(const Shape& shape) {
  CheckReport r{"syzygy"};
  auto x = [&](const Point& p) { return Polynomial(Monomial::variable(static_cast<Var>(shape.index(p)))); };
  std::map<std::pair<int, int>, std::vector<SignedBinomial>> gsets;
  const auto& pts = shape.points();
  for (int i = 1; i <= shape.n(); ++i) {
    AxisSet I{i};
    for (const Point& a : pts)
      for (const Point& a1 : pts)
        for (const Point& b : pts) {
          ++r.checked;
          Polynomial lhs = x(b) * f_polynomial(shape, I, a, a1) - x(a1) * f_polynomial(shape, I, a, b);
          Polynomial rhs = x(switch_point(I, b, a)) * g_polynomial(shape, I, a1, switch_point(I, a, b)) -
                           x(switch_point(I, a, a1)) * g_polynomial(shape, I, switch_point(I, a1, a), b);
          if (!(lhs == rhs)) r.fail("identity fails at i=" + std::to_string(i) + " " + triple_text(a, a1, b));

          AxisSet diff = difference_axes(a, a1);
          if (diff.size() != 1 || diff.contains(i) || b.on(i) == a1.on(i)) continue;
          const int j = diff.axes().front();
          ++r.checked;
          Polynomial special = x(a) * g_polynomial(shape, I, a1, b) - x(a1) * f_polynomial(shape, I, a, b);
          Polynomial target = x(switch_point(I, b, a)) * g_polynomial(shape, I, a1, switch_point(I, a, b));
          if (!(special == target)) r.fail("special case fails at " + triple_text(a, a1, b));
          auto key = std::make_pair(i, j);
          auto it = gsets.find(key);
          if (it == gsets.end()) it = gsets.emplace(key, G_set(shape, {i, j}, {i}).elements).first;
          auto g = g_gen(shape, I, a1, switch_point(I, a, b));
          ++r.checked;
          if (!g || !std::binary_search(it->second.begin(), it->second.end(), *g))
            r.fail("g not in G_{{i,j},{i}} at " + triple_text(a, a1, b));
        }
  }
  return r;
}

CheckReport check_fg_relations(const Shape& shape) {
  CheckReport r{"fg-relations"};
  const std::uint32_t all = shape.all_axes().bits();
  const auto& pts = shape.points();
  for (std::uint32_t lb = 0;; lb = (lb - all) & all) {
    AxisSet L = AxisSet::from_bits(lb);
    for (int l = 1; l <= shape.n(); ++l) {
      if (L.contains(l)) continue;
      AxisSet Ll = L.with(l);
      AxisSet one{l};
      for (const Point& a : pts)
        for (const Point& b : pts) {
          const Point sa = switch_point(L, a, b), sb = switch_point(L, b, a);
          const Polynomial gLl = g_polynomial(shape, Ll, a, b), fLl = f_polynomial(shape, Ll, a, b);
          const Polynomial fL = f_polynomial(shape, L, a, b), gL = g_polynomial(shape, L, a, b);
          const Polynomial gl = g_polynomial(shape, one, sa, sb), fl = f_polynomial(shape, one, sa, sb);
          const bool ok[4] = {gLl == fL + gl, gLl == gL - fl, fLl == fL + fl, fLl == gL - gl};
          for (int k = 0; k < 4; ++k) {
            ++r.checked;
            if (!ok[k])
              r.fail("relation " + std::to_string(k + 1) + " at " + format_point(a) + format_point(b) + " l=" +
                     std::to_string(l));
          }
        }
    }
    if (lb == all) break;
  }
  return r;
}

CheckReport check_subset_criterion(const LatticeTables& tb, const std::vector<PointSet>& signed_sets,
                                   unsigned max_size) {
  CheckReport r{"subset-criterion"};
  const std::size_t N = tb.size();
  // grow subsets in increasing index order
  std::vector<std::pair<PointSet, std::size_t>> work{{0, 0}};
  while (!work.empty()) {
    auto [u, next] = work.back();
    work.pop_back();
    ++r.checked;
    if (is_subset_of_signed(tb, u) != is_subset_of_signed_direct(u, signed_sets))
      r.fail("criteria disagree on " + format_set(tb, u));
    if (static_cast<unsigned>(std::popcount(u)) == max_size) continue;
    for (std::size_t k = next; k < N; ++k) work.emplace_back(u | bit(k), k + 1);
  }
  return r;
}

CheckReport check_minimal_primes(const LatticeTables& tb, IdealKind kind, const std::vector<PrimeComponent>& primes) {
  CheckReport r{"minimal-primes"};
  const Shape& sh = tb.shape();
  GeneratorFamily fam = kind == IdealKind::J      ? slice_ideal(sh, FamilyKind::J_t)
                        : kind == IdealKind::Jhat ? hatJ_ideal(sh)
                                                  : checkJ_ideal(sh);
  for (const auto& P : primes) {
    Reducer red(P.ideal);
    for (const auto& g : fam.elements) {
      ++r.checked;
      if (!red.reduces_to_zero(g)) r.fail("generator outside the prime of " + format_set(tb, P.set));
    }
  }
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      ++r.checked;
      if (ideal_leq(sh, primes[i].ideal, primes[j].ideal))
        r.fail("prime of " + format_set(tb, primes[i].set) + " inside prime of " + format_set(tb, primes[j].set));
    }
  return r;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<std::size_t> known_prime_count(const Shape& shape, IdealKind kind) {
  const auto& r = shape.radices();
  const int n = shape.n();
  const int t = (shape.t() == n && n > 1) ? n - 1 : shape.t();
  auto C2 = [](int x) { return binom(static_cast<std::size_t>(x), 2); };
  if (kind == IdealKind::J) {
    if (n == 2 && r[0] >= 3 && r[1] >= 3)
      return C2(r[0]) * C2(r[1]) + static_cast<std::size_t>(r[0] + r[1]);
    static const std::map<std::pair<std::vector<int>, int>, std::size_t> table = {
        {{{2, 2, 2}, 1}, 3}, {{{2, 2, 2}, 2}, 5},  {{{3, 2, 2}, 1}, 5},
        {{{3, 2, 2}, 2}, 19}, {{{2, 2, 3}, 1}, 17}, {{{2, 2, 3}, 2}, 19},
    };
    auto it = table.find({r, t});
    if (it != table.end()) return it->second;
    return std::nullopt;
  }
  if (n != 3) return std::nullopt;
  if (shape.t() < 3) return kind == IdealKind::Jhat ? std::optional<std::size_t>(1) : std::nullopt;
  const std::size_t r1 = r[0], r2 = r[1], r3 = r[2];
  if (kind == IdealKind::Jhat) return r1 + r2 + r3 + 10 * C2(r[0]) * C2(r[1]) * C2(r[2]);
  return r1 * r2 * (r3 > 2) + r1 * r3 * (r2 > 2) + r2 * r3 * (r1 > 2) + r1 * C2(r[1]) * C2(r[2]) +
         r2 * C2(r[0]) * C2(r[2]) + r3 * C2(r[0]) * C2(r[1]);
}

}  // namespace permideal
