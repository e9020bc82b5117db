#pragma once

// Signed binomials h_{S,K,a,b}, the ideals Var_S, J~_S, G~_S and Q_S, signed
// normal forms and their closed forms (cubic sign ledger, Mm/mM/D), and
// inclusion of Q-ideals.

#include <array>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "permideal/hyperlattice.hpp"
#include "permideal/polynomial.hpp"
#include "permideal/signed_sets.hpp"

namespace permideal {

/// A t-signed set with all-pairs path lengths cached. Keeps a reference to
/// the tables, which must outlive it.
class SignedSet {
 public:
  /// Throws NotSigned carrying the witness when s is not t-signed.
  SignedSet(const LatticeTables& tb, PointSet s);

  const LatticeTables& tables() const { return *tb_; }
  const Shape& shape() const { return tb_->shape(); }
  PointSet mask() const { return mask_; }
  bool contains(std::size_t k) const { return has(mask_, k); }
  bool contains(const Point& p) const { return contains(shape().index(p)); }
  bool connected(std::size_t a, std::size_t b) const { return pl_[a * tb_->size() + b] >= 0; }
  bool connected(const Point& a, const Point& b) const;
  /// Throws NotConnected.
  int pl(std::size_t a, std::size_t b) const;
  int pl(const Point& a, const Point& b) const;
  int ipl(const Point& a, const Point& b) const { return pl(a, b) - 1; }

 private:
  const LatticeTables* tb_;
  PointSet mask_;
  std::vector<int> pl_;
};

/// h_{S,K,a,b} = x_a x_b - (-1)^{#K ipl(a,b)} x_{s(K,a,b)} x_{s(K,b,a)}; nullopt when zero.
/// Throws InvalidArgument unless K lies in D_t(a,b), NotConnected unless a, b are connected.
std::optional<SignedBinomial> h_gen(const SignedSet& s, AxisSet K, const Point& a, const Point& b);

/// h_{S,i,a,b} over connected pairs and single axes i in D_t(a,b).
std::vector<SignedBinomial> tilde_J_generators(const SignedSet& s);
/// h_{S,K,a,b} over connected pairs and all K in D_t(a,b).
std::vector<SignedBinomial> tilde_G(const SignedSet& s);

struct IdealPresentation {
  std::vector<Point> variables;           // x_a generators, sorted
  std::vector<SignedBinomial> binomials;  // sorted, duplicate-free
  PointSet support = 0;                   // the points whose variables are not generators
  int t = 0;
  bool groebner = false;                  // variables + binomials form a Groebner basis

  std::vector<Polynomial> polynomials(const Shape& shape) const;
  std::size_t size() const { return variables.size() + binomials.size(); }
  friend bool operator==(const IdealPresentation& a, const IdealPresentation& b) {
    return a.variables == b.variables && a.binomials == b.binomials;
  }
};

/// Var_S + G~_S.
IdealPresentation groebner_G(const SignedSet& s);
/// Var_S + the reduced Groebner basis of J~_S.
IdealPresentation Q_ideal(const SignedSet& s);
/// Var_S + the defining generators of J~_S, not a Groebner basis in general.
IdealPresentation Q_generators(const SignedSet& s);
/// Variables only: (x_a : a not in s).
IdealPresentation variable_ideal(const LatticeTables& tb, PointSet s);

struct NormalForm {
  bool zero = false;
  int sign = 1;
  Monomial monomial;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Monomial reduction modulo Var(support) plus a binomial basis. Each step
/// rewrites by one basis element whose lead divides the current monomial.
class Reducer {
 public:
  Reducer(PointSet support, std::vector<SignedBinomial> basis);
  explicit Reducer(const IdealPresentation& q);

  /// Deterministic: at each step the first applicable element in basis order.
  NormalForm normal_form(const Monomial& m) const;
  /// Random applicable element at each step.
  NormalForm normal_form(const Monomial& m, std::mt19937_64& rng) const;
  /// Termwise reduction of a polynomial.
  Polynomial reduce(const Polynomial& p) const;
  bool reduces_to_zero(const SignedBinomial& b) const;

  const std::vector<SignedBinomial>& basis() const { return basis_; }

 private:
  std::vector<std::size_t> applicable(const Monomial& m) const;
  bool outside_support(const Monomial& m) const;

  PointSet support_;
  std::vector<SignedBinomial> basis_;
  std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> quadratic_;
  std::vector<std::size_t> other_;
};

inline Reducer reducer_for(const SignedSet& s) { return Reducer(groebner_G(s)); }

struct BigDifference {
  int l = 0;  // smallest differing index of the collapsed tuples, t+2 when equal
  int D = 0;
};
BigDifference big_difference(const Shape& shape, const Point& a, const Point& b);
/// The two-branch formula taken literally, including l >= t+1. Undefined
/// (nullopt) for a = b where the tie branch would recurse forever.
std::optional<int> big_difference_formula(const Shape& shape, const Point& a, const Point& b);

/// Max-min: maxima on collapsed positions 1..l, minima after.
Point max_min(const Shape& shape, const Point& a, const Point& b);
/// min-Max: the complementary choice.
Point min_max(const Shape& shape, const Point& a, const Point& b);

/// Closed-form normal form of x_a x_b modulo Q_S.
NormalForm quad_normal_form(const SignedSet& s, const Point& a, const Point& b);

struct SignLedger {
  AxisSet K1, K2, K3;
  int p = 0;
  int sign() const { return p % 2 == 0 ? 1 : -1; }
};
/// Bookkeeping for x_a x_b x_c -> (-1)^p x_A x_B x_C. All six points must be
/// mutually connected with matching tails pairwise.
SignLedger sign_ledger(const SignedSet& s, const Point& a, const Point& b, const Point& c, const Point& A,
                       const Point& B, const Point& C);

/// Orderings (A,B,C) of a target triple whose tails match those of (a,b,c)
/// position by position.
std::vector<std::array<Point, 3>> tail_matchings(const Shape& shape, const std::array<Point, 3>& abc,
                                                 const std::array<Point, 3>& target);

/// Q1 contained in Q2. Uses the combinatorial reducer when Q2 is a Groebner
/// presentation and the oracle otherwise.
bool ideal_leq(const Shape& shape, const IdealPresentation& q1, const IdealPresentation& q2);

}  // namespace permideal
