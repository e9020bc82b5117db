#pragma once

// Reference Groebner machinery over Q in lex order. Slow and general; used to
// cross-check the combinatorial fast paths.

#include <optional>
#include <vector>

#include "permideal/polynomial.hpp"

namespace permideal {

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i g_i + r with r fully reduced.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// Remainder of full reduction; divisors must be nonzero.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

inline constexpr unsigned kDefaultDegreeCap = 8;

struct GroebnerResult {
  std::vector<Polynomial> basis;
  /// Some S-pair of degree above the cap was skipped.
  bool truncated = false;
  bool homogeneous = true;
  std::optional<unsigned> cap;
};

/// Buchberger with the coprime and chain criteria. Pairs are taken smallest
/// lcm first (degree, then term order). With a cap, pairs whose lcm exceeds
/// it are dropped and the result is flagged truncated.
GroebnerResult buchberger(const std::vector<Polynomial>& generators,
                          std::optional<unsigned> degree_cap = kDefaultDegreeCap);

enum class Membership { yes, no, unknown };
const char* to_string(Membership m);

/// Tri-state membership. A truncated basis still gives "no" for homogeneous
/// ideals when deg f is within the cap; otherwise a nonzero remainder is unknown.
Membership ideal_member(const Polynomial& f, const GroebnerResult& gb);
Membership ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators,
                        std::optional<unsigned> degree_cap = kDefaultDegreeCap);

/// Every S-polynomial of the list reduces to zero modulo the list.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

}  // namespace permideal
