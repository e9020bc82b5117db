#include "permideal/io.hpp"

#include <fstream>

#include "permideal/errors.hpp"

namespace permideal {

Json point_json(const Point& p) { return Json(p.coords()); }

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("point must be a JSON array");
  return Point(j.get<std::vector<int>>());
}

namespace {

Json monomial_json(const Shape& shape, const Monomial& m) {
  Json arr = Json::array();
  for (const Point& p : points_of(shape, m)) arr.push_back(point_json(p));
  return arr;
}

Monomial monomial_from_json(const Shape& shape, const Json& j) {
  std::vector<Point> pts;
  for (const auto& e : j) pts.push_back(point_from_json(e));
  return monomial_of(shape, pts);
}

}  // namespace

Json binomial_json(const Shape& shape, const SignedBinomial& b) {
  Json j;
  j["lead"] = monomial_json(shape, b.lead);
  j["trail"] = b.trail ? monomial_json(shape, *b.trail) : Json(nullptr);
  j["sign"] = b.sign;
  return j;
}

SignedBinomial binomial_from_json(const Shape& shape, const Json& j) {
  try {
    SignedBinomial b;
    b.lead = monomial_from_json(shape, j.at("lead"));
    if (!j.at("trail").is_null()) b.trail = monomial_from_json(shape, j.at("trail"));
    b.sign = j.value("sign", 1);
    return b;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad binomial JSON: ") + e.what());
  }
}

Json family_json(const GeneratorFamily& fam) {
  Json arr = Json::array();
  for (const auto& e : fam.elements) arr.push_back(binomial_json(fam.shape, e));
  return arr;
}

std::vector<SignedBinomial> family_from_json(const Shape& shape, const Json& j) {
  std::vector<SignedBinomial> out;
  for (const auto& e : j) out.push_back(binomial_from_json(shape, e));
  return out;
}

Json presentation_json(const LatticeTables& tb, const IdealPresentation& q) {
  Json j;
  Json set = Json::array();
  for (const Point& p : tb.points_of(q.support)) set.push_back(point_json(p));
  j["set"] = set;
  j["t"] = q.t;
  Json vars = Json::array();
  for (const Point& p : q.variables) vars.push_back(point_json(p));
  j["variables"] = vars;
  Json bins = Json::array();
  for (const auto& b : q.binomials) bins.push_back(binomial_json(tb.shape(), b));
  j["binomials"] = bins;
  j["groebner"] = q.groebner;
  return j;
}

IdealPresentation presentation_from_json(const LatticeTables& tb, const Json& j) {
  try {
    IdealPresentation q;
    std::vector<Point> set;
    for (const auto& e : j.at("set")) set.push_back(point_from_json(e));
    q.support = tb.mask_of(set);
    q.t = j.at("t").get<int>();
    for (const auto& e : j.at("variables")) q.variables.push_back(point_from_json(e));
    q.binomials = family_from_json(tb.shape(), j.at("binomials"));
    q.groebner = j.value("groebner", false);
    return q;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad ideal JSON: ") + e.what());
  }
}

Json signed_set_json(const LatticeTables& tb, PointSet s) {
  SignedClassification cls = classify_signed(tb, s);
  Json j;
  Json pts = Json::array();
  for (const Point& p : tb.points_of(s)) pts.push_back(point_json(p));
  j["points"] = pts;
  Json comps = Json::array();
  for (const auto& c : cls.components) {
    Json cj;
    Json cp = Json::array();
    for (const Point& p : tb.points_of(c.members)) cp.push_back(point_json(p));
    cj["points"] = cp;
    cj["tag"] = to_string(c.tag);
    comps.push_back(cj);
  }
  j["components"] = comps;
  j["t_signed"] = cls.is_t_signed();
  return j;
}

std::string m2_ideal(const Shape& shape, const std::vector<Polynomial>& gens) {
  std::string s = "ideal(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += to_m2(gens[i], shape);
  }
  if (gens.empty()) s += "0_R";
  return s + ")";
}

std::string m2_ideal(const Shape& shape, const IdealPresentation& q) { return m2_ideal(shape, q.polynomials(shape)); }

std::vector<Point> read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open point file " + path);
  std::vector<Point> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_point(line));
  }
  return out;
}

}  // namespace permideal
