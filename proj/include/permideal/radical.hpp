#pragma once

// Monomials and binomials in the radical of J<t>, read off from the maximal
// t-signed sets.

#include <vector>

#include "permideal/polynomial.hpp"
#include "permideal/signed_sets.hpp"

namespace permideal {

/// U is in no t-signed set; decided against the maximal t-signed sets.
bool in_M(PointSet u, const std::vector<PointSet>& maximal);

/// x_M lies in the radical of J<t> iff the support of M is in no t-signed set.
bool radical_monomial_member(const Monomial& m, const std::vector<PointSet>& maximal);

/// All 3-element sets that lie in no t-signed set.
std::vector<PointSet> M3_sets(const LatticeTables& tb, const std::vector<PointSet>& maximal);

/// All monomials of the given degree in the shape's variables, decreasing.
std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned degree);

/// Binomials x_M - sign x_M' of degree 2..degree_cap lying in every maximal
/// Q_S. Pairs that vanish in every Q_S are skipped (they are monomials of the
/// radical). Sorted canonically.
std::vector<SignedBinomial> bounded_radical_binomials(const LatticeTables& tb, const std::vector<PointSet>& maximal,
                                                      unsigned degree_cap = 3);

}  // namespace permideal
