#include "permideal/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

#include "permideal/checks.hpp"
#include "permideal/errors.hpp"
#include "permideal/generators.hpp"
#include "permideal/groebner.hpp"
#include "permideal/io.hpp"
#include "permideal/minimal_primes.hpp"
#include "permideal/prime_structure.hpp"

namespace permideal {

namespace {

struct RunConfig {
  std::string shape = "2,2";
  int t = 1;
  std::string ideal = "cj";
  std::size_t cap_points = kDefaultCapPoints;
  unsigned cap_degree = kDefaultDegreeCap;
  std::string format = "text";
  std::string level = "corpus";
  std::string set;
  std::string monomial;
  std::string L, K;
  bool maximal = false;
  bool set_maximal = false;
  unsigned threads = 1;
};

Shape make_shape(const RunConfig& c) { return Shape(parse_radices(c.shape), c.t); }

std::vector<Point> parse_point_list(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return read_point_file(spec.substr(1));
  // inline: points separated by ';' or juxtaposed
  std::vector<Point> out;
  std::size_t pos = 0;
  while ((pos = spec.find('(', pos)) != std::string::npos) {
    std::size_t close = spec.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated point in " + spec);
    out.push_back(parse_point(spec.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  return out;
}

AxisSet parse_axes(const std::string& text) {
  AxisSet s;
  if (text.empty()) return s;
  for (int a : parse_radices(text)) s = s.with(a);
  return s;
}

void print_binomials(std::ostream& out, const Shape& sh, const std::vector<SignedBinomial>& v,
                     const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& b : v) arr.push_back(binomial_json(sh, b));
    out << arr.dump(2) << "\n";
  } else if (format == "m2") {
    std::vector<Polynomial> polys;
    for (const auto& b : v) polys.push_back(b.to_polynomial());
    out << m2_ideal(sh, polys) << "\n";
  } else {
    for (const auto& b : v) out << to_text(b.to_polynomial(), sh) << "\n";
  }
}

int cmd_gens(const RunConfig& c, std::ostream& out) {
  Shape sh = make_shape(c);
  GeneratorFamily fam{FamilyKind::J_t, sh, {}};
  if (c.ideal == "cj")
    fam = slice_ideal(sh, FamilyKind::J_t);
  else if (c.ideal == "i")
    fam = slice_ideal(sh, FamilyKind::I_t);
  else if (c.ideal == "hatj" || c.ideal == "hatj-monomial")
    fam = hatJ_monomial_form(sh);  // the radical monomial form is the working presentation
  else if (c.ideal == "hatj-binomial")
    fam = hatJ_ideal(sh);
  else if (c.ideal == "checkj")
    fam = checkJ_ideal(sh);
  else if (c.ideal == "g")
    fam = G_set(sh, parse_axes(c.L), parse_axes(c.K));
  else
    throw InvalidArgument("unknown ideal " + c.ideal);
  print_binomials(out, sh, fam.elements, c.format);
  return kExitOk;
}

int cmd_signed_sets(const RunConfig& c, std::ostream& out) {
  LatticeTables tb(make_shape(c));
  std::vector<PointSet> sets = enumerate_t_signed(tb, c.cap_points, c.threads);
  if (c.maximal)
    sets = minimal_Q_sets(tb, sets);
  else if (c.set_maximal)
    sets = set_maximal(sets);
  if (c.format == "json") {
    Json arr = Json::array();
    for (PointSet s : sets) arr.push_back(signed_set_json(tb, s));
    out << arr.dump(2) << "\n";
    return kExitOk;
  }
  for (PointSet s : sets) {
    SignedClassification cls = classify_signed(tb, s);
    out << format_set(tb, s);
    for (const auto& comp : cls.components) out << " " << to_string(comp.tag);
    out << "\n";
  }
  out << "count " << sets.size() << "\n";
  return kExitOk;
}

IdealKind parse_kind(const std::string& s) {
  if (s == "cj") return IdealKind::J;
  if (s == "hatj") return IdealKind::Jhat;
  if (s == "checkj") return IdealKind::Jcheck;
  throw InvalidArgument("min-primes needs --ideal cj, hatj or checkj");
}

int cmd_min_primes(const RunConfig& c, std::ostream& out) {
  LatticeTables tb(make_shape(c));
  auto primes = minimal_primes(tb, parse_kind(c.ideal), c.cap_points, c.threads);
  if (c.format == "json") {
    Json j;
    Json arr = Json::array();
    for (const auto& p : primes) arr.push_back(presentation_json(tb, p.ideal));
    j["primes"] = arr;
    j["count"] = primes.size();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& p : primes) {
    if (c.format == "m2") {
      out << m2_ideal(tb.shape(), p.ideal) << "\n";
    } else {
      out << format_set(tb, p.set) << ": " << p.ideal.variables.size() << " variables, "
          << p.ideal.binomials.size() << " binomials\n";
    }
  }
  out << "count " << primes.size() << "\n";
  return kExitOk;
}

int cmd_reduce(const RunConfig& c, std::ostream& out) {
  LatticeTables tb(make_shape(c));
  if (c.monomial.empty()) throw InvalidArgument("reduce needs --monomial");
  PointSet s = c.set.empty() ? tb.full() : tb.mask_of(parse_point_list(c.set));
  SignedSet ss(tb, s);
  Monomial m = parse_monomial(c.monomial, tb.shape());
  NormalForm nf = reducer_for(ss).normal_form(m);
  Polynomial p = nf.zero ? Polynomial() : Polynomial(nf.monomial, nf.sign);
  if (c.format == "json") {
    Json j;
    j["zero"] = nf.zero;
    j["sign"] = nf.sign;
    Json pts = Json::array();
    if (!nf.zero)
      for (const Point& q : points_of(tb.shape(), nf.monomial)) pts.push_back(point_json(q));
    j["monomial"] = pts;
    out << j.dump(2) << "\n";
  } else if (c.format == "m2") {
    out << to_m2(p, tb.shape()) << "\n";
  } else {
    out << to_text(p, tb.shape()) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  LatticeTables tb(make_shape(c));
  const Shape& sh = tb.shape();
  bool ok = true;
  auto report = [&](const CheckReport& r) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.summary() << "\n";
    ok = ok && r.ok();
  };

  auto signed_sets = enumerate_t_signed(tb, c.cap_points, c.threads);
  auto maximal = minimal_Q_sets(tb, signed_sets);
  out << "t-signed sets " << signed_sets.size() << ", minimal primes " << maximal.size() << "\n";

  for (IdealKind kind : {IdealKind::J, IdealKind::Jhat, IdealKind::Jcheck}) {
    auto expected = known_prime_count(sh, kind);
    if (!expected) continue;
    std::size_t got = kind == IdealKind::J ? maximal.size() : minimal_primes(tb, kind, c.cap_points, c.threads).size();
    CheckReport r;
    r.tag = std::string("prime-count-") + to_string(kind);
    r.checked = 1;
    if (got != *expected) r.fail("expected " + std::to_string(*expected) + ", got " + std::to_string(got));
    report(r);
  }
  if (c.level == "off") {
    out << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return ok ? kExitOk : kExitVerify;
  }

  std::vector<PrimeComponent> primes;
  for (PointSet s : maximal) primes.push_back({s, Q_ideal(SignedSet(tb, s))});
  report(check_minimal_primes(tb, IdealKind::J, primes));
  report(check_containment(tb, signed_sets));
  report(check_h_well_defined(tb, maximal));
  report(check_groebner_combinatorial(tb, maximal));
  report(check_confluence(tb, maximal));
  report(check_ledger_sign(tb, maximal));
  report(check_ledger_moves(tb, maximal));
  report(check_quadratic(tb, maximal));
  report(check_big_difference_parity(tb, maximal));
  report(check_big_difference_symmetry(sh));
  report(check_subset_criterion(tb, signed_sets, 4));
  if (c.level == "full") {
    report(check_groebner_oracle(tb, maximal));
    report(check_syzygy(sh));
    report(check_fg_relations(sh));
    // binomial and monomial forms of the distance-3 ideal agree
    auto hb = hatJ_ideal(sh).polynomials(), hm = hatJ_monomial_form(sh).polynomials();
    CheckReport r;
    r.tag = "hatj-forms";
    if (!hb.empty()) {
      GroebnerResult gb = buchberger(hb, c.cap_degree), gm = buchberger(hm, c.cap_degree);
      for (const auto& f : hm) {
        ++r.checked;
        if (ideal_member(f, gb) != Membership::yes) r.fail("monomial outside the binomial form");
      }
      for (const auto& f : hb) {
        ++r.checked;
        if (ideal_member(f, gm) != Membership::yes) r.fail("binomial outside the monomial form");
      }
    }
    report(r);
  }
  out << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slice-permanent ideals on hyperlattices: generators, signed sets, minimal primes"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--shape", c.shape, "radices, e.g. 2,2,3")->required();
    sub->add_option("--t", c.t, "slice parameter 1 <= t <= n")->required();
    sub->add_option("--format", c.format, "text, json or m2")->check(CLI::IsMember({"text", "json", "m2"}));
    sub->add_option("--cap-points", c.cap_points, "largest |N| for subset enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--cap-degree", c.cap_degree, "degree cap for oracle Buchberger runs")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
  };

  auto* gens = app.add_subcommand("gens", "print a generator family");
  common(gens);
  gens->add_option("--ideal", c.ideal, "cj, i, hatj (monomial form), hatj-binomial, checkj or g");
  gens->add_option("--L", c.L, "difference axes for --ideal g");
  gens->add_option("--K", c.K, "switch axes for --ideal g");

  auto* ss = app.add_subcommand("signed-sets", "enumerate t-signed sets");
  common(ss);
  ss->add_flag("--maximal", c.maximal, "only maximal t-signed sets");
  ss->add_flag("--set-maximal", c.set_maximal, "only inclusion-maximal t-signed sets");

  auto* mp = app.add_subcommand("min-primes", "minimal primes of J, hatJ or checkJ");
  common(mp);
  mp->add_option("--ideal", c.ideal, "cj, hatj or checkj")->check(CLI::IsMember({"cj", "hatj", "checkj"}));

  auto* rd = app.add_subcommand("reduce", "normal form of a monomial modulo Q_S");
  common(rd);
  rd->add_option("--set", c.set, "@file with one point per line, or inline points; default N");
  rd->add_option("--monomial", c.monomial, "e.g. \"(1,1,1)(2,2,1)\"")->required();

  auto* vf = app.add_subcommand("verify", "run the invariant suites and known counts");
  common(vf);
  vf->add_option("--level", c.level, "off, corpus or full")->check(CLI::IsMember({"off", "corpus", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gens) return cmd_gens(c, out);
    if (*ss) return cmd_signed_sets(c, out);
    if (*mp) return cmd_min_primes(c, out);
    if (*rd) return cmd_reduce(c, out);
    if (*vf) return cmd_verify(c, out);
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permideal
