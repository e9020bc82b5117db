#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracle.hpp"
#include "permideal/errors.hpp"
#include "permideal/generators.hpp"
#include "permideal/groebner.hpp"
#include "permideal/radical.hpp"
#include "permideal/signed_sets.hpp"

using namespace permideal;

namespace {

PointSet mask(const LatticeTables& tb, std::vector<Point> pts) { return tb.mask_of(pts); }

std::vector<Shape> corpus() {
  return {Shape({2, 3}, 1), Shape({3, 3}, 1), Shape({2, 2, 2}, 1), Shape({2, 2, 2}, 2), Shape({2, 2, 2}, 3),
          Shape({3, 2, 2}, 1), Shape({3, 2, 2}, 2), Shape({2, 2, 3}, 1), Shape({2, 2, 3}, 2)};
}

// Box S_1 x ... x S_n given per-axis value masks.
PointSet box(const LatticeTables& tb, const std::vector<unsigned>& axis_values) {
  PointSet out = 0;
  for (std::size_t k = 0; k < tb.size(); ++k) {
    const auto& p = tb.shape().point(k);
    bool in = true;
    for (int i = 1; i <= p.n(); ++i)
      if (!((axis_values[static_cast<std::size_t>(i - 1)] >> (p.on(i) - 1)) & 1u)) in = false;
    if (in) out |= bit(k);
  }
  return out;
}

}  // namespace

TEST_CASE("switchability examples") {
  LatticeTables tb(Shape({2, 2, 2}, 1));
  CHECK(is_t_switchable(tb, 0));
  // Every face of the cube is closed under 1-switches as the definition reads:
  // a switch along axis 1 either fixes a pair or stays inside the face. The
  // face with constant first coordinate is in fact even 1-signed (constant head).
  for (int axis = 1; axis <= 3; ++axis)
    for (int v = 1; v <= 2; ++v) {
      PointSet face = 0;
      for (std::size_t k = 0; k < tb.size(); ++k)
        if (tb.shape().point(k).on(axis) == v) face |= bit(k);
      CHECK(is_t_switchable(tb, face));
      CHECK(oracle::switchable(1, oracle::subset_points(tb.shape(), face)));
    }
  PointSet face1 = mask(tb, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}});
  CHECK(classify_signed(tb, face1).components[0].tag == ComponentTag::CONST_HEAD);

  // A genuine violation: two points of distance 2 across axes {1,2} without
  // their switches.
  PointSet pair = mask(tb, {{1, 1, 1}, {2, 2, 1}});
  CHECK_FALSE(is_t_switchable(tb, pair));
  auto v = switchability_violation(tb, pair);
  REQUIRE(v);
  CHECK(v->axis == 1);
  CHECK(distance(v->a, v->b) == 2);
}

TEST_CASE("switchability agrees with the definition") {
  for (const auto& s : corpus()) {
    LatticeTables tb(s);
    const PointSet limit = PointSet{1} << s.size();
    for (PointSet m = 0; m < limit; ++m)
      CHECK(is_t_switchable(tb, m) == oracle::switchable(s.t(), oracle::subset_points(s, m)));
  }
}

TEST_CASE("boxes with at most two values per axis are signed single components") {
  for (const auto& s : {Shape({3, 2, 2}, 1), Shape({3, 2, 2}, 2), Shape({3, 2, 2}, 3), Shape({2, 2, 3}, 1),
                        Shape({2, 3, 2}, 2)}) {
    LatticeTables tb(s);
    std::vector<std::vector<unsigned>> choices(3);
    for (int i = 1; i <= 3; ++i)
      for (unsigned vm = 1; vm < (1u << s.radix(i)); ++vm)
        if (std::popcount(vm) <= 2) choices[static_cast<std::size_t>(i - 1)].push_back(vm);
    for (auto v1 : choices[0])
      for (auto v2 : choices[1])
        for (auto v3 : choices[2]) {
          PointSet b = box(tb, {v1, v2, v3});
          CHECK(is_t_switchable(tb, b));
          CHECK(is_t_signed(tb, b));
          CHECK(components(tb, b).size() == 1);
        }
  }
}

TEST_CASE("switchable closure") {
  LatticeTables tb(Shape({2, 3}, 1));
  PointSet u = mask(tb, {{1, 1}, {2, 2}, {1, 3}});
  CHECK(switchable_closure(tb, u) == tb.full());
  CHECK(switchable_closure(tb, bit(3)) == bit(3));

  LatticeTables cube(Shape({2, 2, 2}, 1));
  for (PointSet a = 0; a < 256; ++a) {
    PointSet ca = switchable_closure(cube, a);
    CHECK((a & ~ca) == 0);
    CHECK(switchable_closure(cube, ca) == ca);
    CHECK(is_t_switchable(cube, ca));
    for (PointSet b = 0; b < 256; ++b)
      if ((a & ~b) == 0) CHECK((ca & ~switchable_closure(cube, b)) == 0);
  }
  // Smallest: no switchable set between U and its closure.
  for (PointSet a = 0; a < 256; ++a) {
    PointSet ca = switchable_closure(cube, a);
    for (PointSet m = a; m < 256; ++m)
      if ((a & ~m) == 0 && is_t_switchable(cube, m)) CHECK((ca & ~m) == 0);
  }
}

TEST_CASE("components and path lengths") {
  Shape s({3, 2, 2}, 1);
  LatticeTables tb(s);
  PointSet seg = mask(tb, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}});
  CHECK(path_length(tb, seg, Point{1, 1, 1}, Point{1, 1, 1}) == 0);
  CHECK(path_length(tb, seg, Point{1, 1, 1}, Point{3, 1, 1}) == 1);
  CHECK_THROWS_AS(path_length(tb, seg | bit(s.index({1, 2, 2})), Point{1, 1, 1}, Point{1, 2, 2}), NotConnected);

  LatticeTables cube(Shape({2, 2, 2}, 1));
  CHECK(path_length(cube, cube.full(), Point{1, 1, 1}, Point{2, 2, 2}) == 3);

  for (const auto& sh : corpus()) {
    LatticeTables t(sh);
    const PointSet limit = PointSet{1} << sh.size();
    for (PointSet m = 0; m < limit; m += 7) {
      auto pts = oracle::subset_points(sh, m);
      auto labels = oracle::component_labels(pts);
      auto comps = components(t, m);
      CHECK(comps.size() == (labels.empty() ? 0 : static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1)));
      PointSet uni = 0;
      for (auto c : comps) {
        CHECK((uni & c) == 0);
        uni |= c;
      }
      CHECK(uni == m);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
          bool same = labels[i] == labels[j];
          if (!same) continue;
          int pl = path_length(t, m, pts[i], pts[j]);
          CHECK((pl == 0) == (i == j));
          CHECK(pl >= distance(pts[i], pts[j]));
        }
    }
  }
}

TEST_CASE("classification examples") {
  LatticeTables cube(Shape({2, 2, 2}, 1));
  auto c = classify_signed(cube, cube.full());
  CHECK(c.is_t_signed());
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].tag == ComponentTag::PARITY_CONSISTENT);

  Shape s23({2, 3}, 1);
  LatticeTables m23(s23);
  c = classify_signed(m23, m23.full());
  CHECK_FALSE(c.is_t_signed());
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].tag == ComponentTag::NOT_SIGNED);
  const auto& w = c.components[0].odd_walk;
  REQUIRE(w.size() >= 4);
  CHECK(w.front() == w.back());
  CHECK((w.size() - 1) % 2 == 1);
  for (std::size_t k = 0; k + 1 < w.size(); ++k) CHECK(m23.dist(w[k], w[k + 1]) == 1);
  CHECK(c.witness(s23).find("odd") != std::string::npos);

  LatticeTables s322(Shape({3, 2, 2}, 1));
  PointSet seg = s322.mask_of({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}});
  c = classify_signed(s322, seg);
  CHECK(c.is_t_signed());
  CHECK(c.components[0].tag == ComponentTag::NEAR_SINGLETON);

  PointSet line = s322.mask_of({{1, 1, 1}, {1, 1, 2}});
  CHECK(classify_signed(s322, line).components[0].tag == ComponentTag::CONST_HEAD);
}

TEST_CASE("t-signed classification agrees with the definition") {
  for (const auto& s : corpus()) {
    CAPTURE(format_radices(s.radices()));
    CAPTURE(s.t());
    LatticeTables tb(s);
    auto want = oracle::all_t_signed(s);
    CHECK(enumerate_t_signed(tb) == want);
    CHECK(enumerate_t_signed(tb, kDefaultCapPoints, 4) == want);
    CHECK(want.front() == 0);
  }
}

TEST_CASE("enumeration refuses shapes above the cap") {
  LatticeTables tb(Shape({3, 3, 2}, 1));
  CHECK_THROWS_AS(enumerate_t_signed(tb), CapExceeded);
  try {
    enumerate_t_signed(tb, 10);
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("switches of connected pairs stay in the component") {
  for (const auto& s : {Shape({2, 2, 2}, 1), Shape({2, 2, 2}, 2), Shape({3, 2, 2}, 1), Shape({3, 2, 2}, 2)}) {
    LatticeTables tb(s);
    for (PointSet S : enumerate_t_signed(tb)) {
      auto comps = components(tb, S);
      for (PointSet comp : comps) {
        auto idx = tb.indices_of(comp);
        for (auto i : idx)
          for (auto j : idx)
            for (std::uint32_t kb = 0; kb < (1u << s.t()); ++kb) {
              AxisSet K = AxisSet::from_bits(kb);
              auto a = s.point(i), b = s.point(j);
              auto sa = s.index(switch_point(K, a, b)), sb = s.index(switch_point(K, b, a));
              CHECK(has(comp, sa));
              CHECK(has(comp, sb));
            }
      }
      // Parity facts inside parity-consistent components.
      for (const auto& cc : classify_signed(tb, S).components) {
        if (cc.tag != ComponentTag::PARITY_CONSISTENT) continue;
        auto idx = tb.indices_of(cc.members);
        for (auto i : idx)
          for (auto j : idx) {
            int pab = path_length(tb, S, i, j);
            for (std::uint32_t kb = 0; kb < (1u << s.t()); ++kb) {
              AxisSet K = AxisSet::from_bits(kb);
              auto a = s.point(i), b = s.point(j);
              int ps = path_length(tb, S, switch_point(K, a, b), switch_point(K, b, a));
              CHECK((pab - ps) % 2 == 0);
            }
            for (auto k : idx) CHECK((pab + path_length(tb, S, j, k) - path_length(tb, S, i, k)) % 2 == 0);
          }
      }
    }
  }
}

TEST_CASE("signed components take at most two values on head axes unless near-singleton") {
  for (const auto& s : {Shape({2, 2, 3}, 1), Shape({3, 2, 2}, 1), Shape({3, 2, 2}, 2)}) {
    LatticeTables tb(s);
    for (PointSet S : enumerate_t_signed(tb))
      for (PointSet comp : components(tb, S)) {
        auto pts = tb.points_of(comp);
        bool near = true;
        for (const auto& a : pts)
          for (const auto& b : pts)
            if (distance(a, b) > 1) near = false;
        bool two = true;
        for (int i = 1; i <= s.t(); ++i) {
          std::set<int> vals;
          for (const auto& p : pts) vals.insert(p.on(i));
          if (vals.size() > 2) two = false;
        }
        CHECK((near || two));
      }
  }
  // The trailing axis of [2,2,3] with t = 1 does take three values somewhere.
  LatticeTables tb(Shape({2, 2, 3}, 1));
  bool three = false;
  for (PointSet S : enumerate_t_signed(tb))
    for (PointSet comp : components(tb, S)) {
      std::set<int> vals;
      for (const auto& p : tb.points_of(comp)) vals.insert(p.on(3));
      if (vals.size() == 3 && classify_signed(tb, comp).components[0].tag == ComponentTag::PARITY_CONSISTENT)
        three = true;
    }
  CHECK(three);
}

TEST_CASE("subset-of-signed examples") {
  Shape s({3, 2, 2}, 3);
  LatticeTables tb(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) CHECK(is_subset_of_signed(tb, bit(i) | bit(j)));
  CHECK_FALSE(is_subset_of_signed(tb, tb.mask_of({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {1, 2, 2}})));
  CHECK(is_subset_of_signed(tb, tb.mask_of({{2, 1, 1}, {3, 1, 1}, {1, 2, 2}})));
}

TEST_CASE("closure criterion agrees with direct search") {
  for (const auto& s : corpus()) {
    CAPTURE(format_radices(s.radices()));
    CAPTURE(s.t());
    LatticeTables tb(s);
    auto all = oracle::all_t_signed(s);
    const PointSet limit = PointSet{1} << s.size();
    for (PointSet u = 0; u < limit; ++u) {
      bool direct = std::any_of(all.begin(), all.end(), [&](PointSet S) { return (u & ~S) == 0; });
      CHECK(is_subset_of_signed(tb, u) == direct);
      CHECK(is_subset_of_signed_direct(u, all) == direct);
    }
  }
}

TEST_CASE("set-maximal filter") {
  std::vector<PointSet> sets{0b0001, 0b0011, 0b0100, 0b0111, 0b1000};
  CHECK(set_maximal(sets) == std::vector<PointSet>{0b0111, 0b1000});
  LatticeTables cube(Shape({2, 2, 2}, 1));
  CHECK(set_maximal(enumerate_t_signed(cube)) == std::vector<PointSet>{cube.full()});
}

TEST_CASE("odd walks force monomials into the sum of G_{{i,j},{i}}") {
  struct Config {
    Shape shape;
    std::vector<Point> set;
  };
  std::vector<Config> configs{
      {Shape({2, 3}, 1), {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}},
      {Shape({2, 2, 3}, 1), {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3}}},
      {Shape({2, 2, 3}, 1), {{1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3}}},
  };
  for (const auto& cfg : configs) {
    LatticeTables tb(cfg.shape);
    PointSet S = tb.mask_of(cfg.set);
    REQUIRE(is_t_switchable(tb, S));
    const std::size_t n = tb.size();
    std::size_t pairs = 0;
    std::map<int, bool> found_for;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!has(S, a) || !has(S, b) || tb.dist(a, b) < 2) continue;
        const auto& pa = cfg.shape.point(a);
        const auto& pb = cfg.shape.point(b);
        for (int i = 1; i <= cfg.shape.t(); ++i) {
          if (pa.on(i) == pb.on(i)) continue;
          auto cls = classify_signed(tb, S);
          if (cls.components[0].tag != ComponentTag::NOT_SIGNED) continue;
          ++pairs;
          if (!found_for.count(i)) {
            std::vector<Polynomial> gens;
            for (int j = 1; j <= cfg.shape.n(); ++j)
              if (j != i)
                for (const auto& p : G_set(cfg.shape, AxisSet{i, j}, {i}).polynomials()) gens.push_back(p);
            auto gb = buchberger(gens);
            bool hit = false;
            for (unsigned d = 2; d <= 4 && !hit; ++d)
              for (const auto& m : monomials_of_degree(n, d)) {
                bool inside = true;
                for (auto [v, e] : m.factors())
                  if (!has(S, v)) inside = false;
                if (inside && ideal_member(Polynomial(m), gb) == Membership::yes) {
                  hit = true;
                  break;
                }
              }
            found_for[i] = hit;
          }
          const bool found = found_for[i];
          CHECK(found);
        }
      }
    CHECK(pairs > 0);
  }
}
