#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "permideal/cli.hpp"
#include "permideal/io.hpp"
#include "permideal/minimal_primes.hpp"

using namespace permideal;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "permideal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("gens prints the requested family") {
  auto r = run({"gens", "--shape", "2,2", "--t", "1", "--ideal", "cj"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 1);

  r = run({"gens", "--shape", "2,2,2", "--t", "3", "--ideal", "hatj"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 4);

  Shape s({3, 2, 2}, 2);
  r = run({"gens", "--shape", "3,2,2", "--t", "2", "--ideal", "cj", "--format", "json"});
  CHECK(r.code == kExitOk);
  auto j = Json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == oracle::slice_generators(s, true).size());
  CHECK(family_from_json(s, j) == slice_ideal(s, FamilyKind::J_t).elements);
}

TEST_CASE("min-primes counts and JSON round trip") {
  auto r = run({"min-primes", "--shape", "2,2,2", "--t", "2"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).back() == "count 5");
  r = run({"min-primes", "--shape", "2,2,3", "--t", "1"});
  CHECK(lines(r.out).back() == "count 17");

  r = run({"min-primes", "--shape", "3,2,2", "--t", "1", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["count"] == 5);
  LatticeTables tb(Shape({3, 2, 2}, 1));
  auto primes = minimal_primes(tb, IdealKind::J);
  REQUIRE(j["primes"].size() == primes.size());
  for (std::size_t k = 0; k < primes.size(); ++k)
    CHECK(presentation_from_json(tb, j["primes"][k]) == primes[k].ideal);

  r = run({"min-primes", "--shape", "2,2,2", "--t", "3", "--ideal", "hatj", "--format", "m2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("ideal(") != std::string::npos);
}

TEST_CASE("verify reports counts and failures") {
  auto r = run({"verify", "--shape", "3,2,2", "--t", "2", "--level", "corpus"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("minimal primes 19") != std::string::npos);
  CHECK(lines(r.out).back() == "verify: PASS");

  // The hatJ closed form disagrees with enumeration on this shape.
  r = run({"verify", "--shape", "3,2,2", "--t", "3", "--level", "corpus"});
  CHECK(r.code == kExitVerify);
  CHECK(r.out.find("FAIL prime-count-hatj") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"gens", "--shape", "2,2", "--t", "5"}).code == kExitUsage);
  CHECK(run({"gens", "--shape", "2,x", "--t", "1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"gens", "--shape", "2,2", "--t", "1", "--format", "xml"}).code == kExitUsage);
  auto r = run({"min-primes", "--shape", "3,3,2", "--t", "1"});
  CHECK(r.code == kExitCap);
  CHECK(r.err.find("cap 16") != std::string::npos);
  CHECK(run({"min-primes", "--shape", "3,3,2", "--t", "1", "--cap-points", "12"}).code == kExitCap);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  for (std::string cmd : {"min-primes", "signed-sets"}) {
    auto a = run({cmd, "--shape", "2,2,3", "--t", "1", "--threads", "1", "--format", "json"});
    auto b = run({cmd, "--shape", "2,2,3", "--t", "1", "--threads", "4", "--format", "json"});
    auto c = run({cmd, "--shape", "2,2,3", "--t", "1", "--threads", "4", "--format", "json"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
  }
}

TEST_CASE("reduce with a point file") {
  auto path = std::filesystem::temp_directory_path() / "permideal_cli_set.txt";
  {
    std::ofstream out(path);
    out << "# a 1-signed edge pair\n(1,1,1)\n(2,1,1)\n(1,2,2)\n(2,2,2)\n";
  }
  auto r = run({"reduce", "--shape", "2,2,2", "--t", "1", "--set", "@" + path.string(), "--monomial",
                "(1,1,1)(2,2,2)"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 1);
  // A variable outside the set reduces to zero.
  r = run({"reduce", "--shape", "2,2,2", "--t", "1", "--set", "@" + path.string(), "--monomial", "(1,1,2)"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"0"});

  r = run({"reduce", "--shape", "2,2,2", "--t", "1", "--monomial", "(1,1,1)(2,2,1)"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"-x_(2,1,1)*x_(1,2,1)"});

  {
    std::ofstream out(path);
    out << "(1,1,1)\n(2,2,1)\n";
  }
  r = run({"reduce", "--shape", "2,2,2", "--t", "1", "--set", "@" + path.string(), "--monomial", "(1,1,1)"});
  CHECK(r.code != kExitOk);
  CHECK(r.err.find("not t-signed") != std::string::npos);
  std::filesystem::remove(path);
}
