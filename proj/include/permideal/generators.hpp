#pragma once

// The generator families f/g, I<t>, J<t>, G_{L,K}, the distance-3 ideal Jhat
// and its union Jcheck with J<t>.

#include <optional>
#include <string>
#include <vector>

#include "permideal/hyperlattice.hpp"
#include "permideal/polynomial.hpp"

namespace permideal {

enum class FamilyKind { I_t, J_t, Jhat_t, Jhat_monomial, Jcheck_t, G_set };
const char* to_string(FamilyKind k);

struct GeneratorFamily {
  FamilyKind kind;
  Shape shape;
  /// Canonical, sorted, duplicate-free.
  std::vector<SignedBinomial> elements;

  std::vector<Polynomial> polynomials() const;
};

/// f_{K,a,b} = x_a x_b - x_{s(K,a,b)} x_{s(K,b,a)}; nullopt when it vanishes.
std::optional<SignedBinomial> f_gen(const Shape& shape, AxisSet K, const Point& a, const Point& b);
/// g_{K,a,b} = x_a x_b + x_{s(K,a,b)} x_{s(K,b,a)}. When both products agree the
/// element 2 x_a x_b is kept as the monomial x_a x_b.
std::optional<SignedBinomial> g_gen(const Shape& shape, AxisSet K, const Point& a, const Point& b);

// Literal polynomials, coefficients included, for symbolic identities.
Polynomial f_polynomial(const Shape& shape, AxisSet K, const Point& a, const Point& b);
Polynomial g_polynomial(const Shape& shape, AxisSet K, const Point& a, const Point& b);

/// I<t> (kind I_t) or J<t> (kind J_t).
GeneratorFamily slice_ideal(const Shape& shape, FamilyKind kind);
/// All g_{K,a,b} with {j : a_j != b_j} = L. Requires K subset of L.
GeneratorFamily G_set(const Shape& shape, AxisSet L, AxisSet K);
GeneratorFamily hatJ_ideal(const Shape& shape);
GeneratorFamily hatJ_monomial_form(const Shape& shape);
GeneratorFamily checkJ_ideal(const Shape& shape);

/// Unordered pairs a < b (by index) with d(a,b) = d.
std::vector<std::pair<std::size_t, std::size_t>> pairs_at_distance(const Shape& shape, int d);

}  // namespace permideal
