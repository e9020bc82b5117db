#pragma once

// JSON and Macaulay2 export, plus the matching JSON readers.

#include <json.hpp>

#include <string>
#include <vector>

#include "permideal/generators.hpp"
#include "permideal/prime_structure.hpp"
#include "permideal/signed_sets.hpp"

namespace permideal {

using Json = nlohmann::json;

Json point_json(const Point& p);
Point point_from_json(const Json& j);

/// {"lead": [points], "trail": [points] or null, "sign": +-1}
Json binomial_json(const Shape& shape, const SignedBinomial& b);
SignedBinomial binomial_from_json(const Shape& shape, const Json& j);

Json family_json(const GeneratorFamily& fam);
std::vector<SignedBinomial> family_from_json(const Shape& shape, const Json& j);

Json presentation_json(const LatticeTables& tb, const IdealPresentation& q);
IdealPresentation presentation_from_json(const LatticeTables& tb, const Json& j);

/// Points, components and their condition tags.
Json signed_set_json(const LatticeTables& tb, PointSet s);

/// ideal(x_1_1*x_2_2+x_1_2*x_2_1, ...)
std::string m2_ideal(const Shape& shape, const std::vector<Polynomial>& gens);
std::string m2_ideal(const Shape& shape, const IdealPresentation& q);

/// One point per line; blank lines and lines starting with '#' are skipped.
std::vector<Point> read_point_file(const std::string& path);

}  // namespace permideal
