#pragma once

// Minimal primes of J<t>, Jhat<t> and Jcheck<t> as Q-ideals of t-signed sets.

#include <vector>

#include "permideal/prime_structure.hpp"
#include "permideal/signed_sets.hpp"

namespace permideal {

enum class IdealKind { J, Jhat, Jcheck };
const char* to_string(IdealKind k);

struct PrimeComponent {
  PointSet set = 0;
  IdealPresentation ideal;
};

/// Among t-signed candidates, those whose Q_S is inclusion-minimal. Sorted by
/// decreasing size, then by mask.
std::vector<PointSet> minimal_Q_sets(const LatticeTables& tb, std::vector<PointSet> candidates);

/// Maximal t-signed sets: Q_S inclusion-minimal among all t-signed S.
std::vector<PointSet> maximal_t_signed(const LatticeTables& tb, std::size_t cap_points = kDefaultCapPoints,
                                       unsigned threads = 1);

/// Pairs with d = d_t = 3, as adjacency masks.
std::vector<PointSet> far_graph(const LatticeTables& tb);
bool has_far_pair(const LatticeTables& tb, PointSet s);
/// Maximal independent sets of the far graph (Bron-Kerbosch on the complement).
std::vector<PointSet> far_independent_sets(const LatticeTables& tb);

std::vector<PrimeComponent> minimal_primes(const LatticeTables& tb, IdealKind kind,
                                          std::size_t cap_points = kDefaultCapPoints, unsigned threads = 1);

}  // namespace permideal
