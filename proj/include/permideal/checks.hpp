#pragma once

// Invariant suites shared by the verify command and the test suites. Each
// returns a report with a short tag naming the property.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permideal/minimal_primes.hpp"
#include "permideal/signed_sets.hpp"

namespace permideal {

struct CheckReport {
  std::string tag;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(std::string what);
  std::string summary() const;
};

/// Every J<t> generator reduces to zero modulo each Q_S.
CheckReport check_containment(const LatticeTables& tb, const std::vector<PointSet>& signed_sets);
/// S-polynomials of G~_S reduce to zero with the combinatorial reducer.
CheckReport check_groebner_combinatorial(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// The same with rational long division.
CheckReport check_groebner_oracle(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// h_{S,K,a,b} = h_{S,L,a,b} whenever the switched products agree.
CheckReport check_h_well_defined(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// Cubic monomials inside one component: random reduction orders agree.
CheckReport check_confluence(const LatticeTables& tb, const std::vector<PointSet>& sets, unsigned rounds = 20,
                             std::uint64_t seed = 1);
/// The ledger parity p matches the cubic normal-form sign for every tail matching.
CheckReport check_ledger_sign(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// p(a',b',c') - p(a,b,c) + r is even for the three switch moves.
CheckReport check_ledger_moves(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// Closed-form quadratic normal forms equal generic reduction; Mm, mM are
/// invariant under paired switches.
CheckReport check_quadratic(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// (#K + D(a,b)) ipl  ==  D(s(K,a,b), s(K,b,a)) ipl  (mod 2).
CheckReport check_big_difference_parity(const LatticeTables& tb, const std::vector<PointSet>& sets);
/// D(a,b) = D(b,a) whenever the formula's first branch covers both orders.
CheckReport check_big_difference_symmetry(const Shape& shape);
/// The syzygy x_b f_{i,a,a1} - x_{a1} f_{i,a,b} = x_{s(i,b,a)} g_{i,a1,s(i,a,b)} - x_{s(i,a,a1)} g_{i,s(i,a1,a),b}
/// and its special case inside G_{{i,j},{i}}.
CheckReport check_syzygy(const Shape& shape);
/// The four f/g relations for l not in L.
CheckReport check_fg_relations(const Shape& shape);
/// Closure criterion for "in some t-signed set" agrees with direct search.
CheckReport check_subset_criterion(const LatticeTables& tb, const std::vector<PointSet>& signed_sets,
                                   unsigned max_size = 4);
/// Minimal primes pairwise incomparable and each containing the ideal's generators.
CheckReport check_minimal_primes(const LatticeTables& tb, IdealKind kind, const std::vector<PrimeComponent>& primes);

/// Count predicted by a closed form or a worked example, when one is known.
std::optional<std::size_t> known_prime_count(const Shape& shape, IdealKind kind);
std::size_t binom(std::size_t n, std::size_t k);

}  // namespace permideal
