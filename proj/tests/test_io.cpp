#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "permideal/errors.hpp"
#include "permideal/io.hpp"
#include "permideal/minimal_primes.hpp"

using namespace permideal;

TEST_CASE("point and binomial JSON round-trip") {
  Point p({3, 1, 2});
  CHECK(point_json(p).dump() == "[3,1,2]");
  CHECK(point_from_json(point_json(p)) == p);
  CHECK_THROWS_AS(point_from_json(Json("x")), ParseError);

  Shape s({2, 2, 2}, 2);
  for (const auto& b : slice_ideal(s, FamilyKind::J_t).elements) {
    auto j = binomial_json(s, b);
    CHECK(j["sign"] == -1);  // permanents: lead + trail
    CHECK(binomial_from_json(s, j) == b);
    CHECK(binomial_from_json(s, Json::parse(j.dump())) == b);
  }
  auto mono = SignedBinomial::monomial(monomial_of(s, {{1, 1, 1}, {2, 2, 2}}));
  auto j = binomial_json(s, mono);
  CHECK(j["trail"].is_null());
  CHECK(binomial_from_json(s, j) == mono);
  CHECK_THROWS_AS(binomial_from_json(s, Json::object()), ParseError);
}

TEST_CASE("family JSON round-trip") {
  for (auto kind : {FamilyKind::J_t, FamilyKind::I_t}) {
    Shape s({3, 2, 2}, 2);
    auto fam = slice_ideal(s, kind);
    CHECK(family_from_json(s, Json::parse(family_json(fam).dump())) == fam.elements);
  }
  Shape s({2, 2, 2}, 3);
  auto hat = hatJ_monomial_form(s);
  CHECK(family_json(hat).size() == 4);
  CHECK(family_from_json(s, family_json(hat)) == hat.elements);
}

TEST_CASE("presentation JSON round-trip") {
  for (const auto& s : {Shape({2, 2, 2}, 1), Shape({3, 2, 2}, 2)}) {
    LatticeTables tb(s);
    for (const auto& p : minimal_primes(tb, IdealKind::J)) {
      auto back = presentation_from_json(tb, Json::parse(presentation_json(tb, p.ideal).dump()));
      CHECK(back == p.ideal);
      CHECK(back.support == p.ideal.support);
    }
  }
  LatticeTables tb(Shape({2, 2}, 1));
  CHECK_THROWS_AS(presentation_from_json(tb, Json::object()), ParseError);
}

TEST_CASE("signed set JSON") {
  LatticeTables tb(Shape({2, 3}, 1));
  auto j = signed_set_json(tb, tb.full());
  CHECK(j["points"].size() == 6);
  CHECK(j["t_signed"] == false);
  auto seg = tb.mask_of({{1, 1}, {1, 2}, {1, 3}});
  auto k = signed_set_json(tb, seg);
  CHECK(k["t_signed"] == true);
  REQUIRE(k["components"].size() == 1);
  CHECK(k["components"][0]["points"].size() == 3);
}

TEST_CASE("Macaulay2 export") {
  Shape s({2, 2}, 1);
  auto J = slice_ideal(s, FamilyKind::J_t).polynomials();
  CHECK(m2_ideal(s, J) == "ideal(x_2_2*x_1_1+x_2_1*x_1_2)");
  CHECK(m2_ideal(s, std::vector<Polynomial>{}) == "ideal(0_R)");

  LatticeTables tb(Shape({2, 2, 2}, 2));
  auto primes = minimal_primes(tb, IdealKind::J);
  for (const auto& p : primes) {
    auto text = m2_ideal(tb.shape(), p.ideal);
    CHECK(text.rfind("ideal(", 0) == 0);
    CHECK(text.find('(', 6) == std::string::npos);
  }
}

TEST_CASE("point files skip comments and blank lines") {
  auto path = std::filesystem::temp_directory_path() / "permideal_points.txt";
  {
    std::ofstream out(path);
    out << "# two points\n\n(1,1,1)\n   \n  (2, 2, 1)\n# end\n";
  }
  auto pts = read_point_file(path.string());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point({1, 1, 1}));
  CHECK(pts[1] == Point({2, 2, 1}));
  {
    std::ofstream out(path);
    out << "1,1,1\n";
  }
  CHECK_THROWS_AS(read_point_file(path.string()), ParseError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_point_file(path.string()), InvalidArgument);
}
