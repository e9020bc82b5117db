#pragma once

// Exact sparse polynomials over Q in the variables x_a, a in N. Variable v is
// the point of index v in the shape's lexicographic enumeration, and larger
// points are larger variables. Monomials are ordered lexicographically.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permideal/hyperlattice.hpp"

namespace permideal {

using Var = std::uint32_t;
using Rational = mpq_class;

class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(Var v, std::uint32_t exponent = 1);
  /// Product of the listed variables, repetitions allowed.
  static Monomial product(std::span<const Var> vars);
  static Monomial product(std::initializer_list<Var> vars) {
    return product(std::span<const Var>(vars.begin(), vars.size()));
  }

  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;
  /// Factors sorted by decreasing variable.
  const std::vector<Factor>& factors() const { return factors_; }
  /// Variables with multiplicity, decreasing.
  std::vector<Var> expand() const;
  Var max_var() const { return factors_.front().first; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// this / other; other must divide this.
  Monomial quotient(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Lex order: the factor lists are compared left to right, and at the first
  // difference the larger variable or larger exponent wins.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  Polynomial() = default;
  explicit Polynomial(Monomial m, Rational c = 1);
  static Polynomial constant(Rational c) { return Polynomial(Monomial(), std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Terms in decreasing monomial order.
  const TermMap& terms() const { return terms_; }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  std::uint32_t degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  /// Multiply by c*m.
  Polynomial times(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.times(Monomial(), c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_canonical(const Monomial& m, const Rational& c);
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// lead - sign * trail with lead > trail, or the pure monomial lead when no
/// trail is present. Coefficients are +-1 only.
struct SignedBinomial {
  Monomial lead;
  std::optional<Monomial> trail;
  int sign = 1;

  /// Canonical form of m1 - eps*m2. nullopt when the element is zero; when
  /// m1 == m2 and eps == -1 the element 2*m1 is stored as the pure monomial m1.
  static std::optional<SignedBinomial> make(const Monomial& m1, const Monomial& m2, int eps);
  static SignedBinomial monomial(const Monomial& m) { return {m, std::nullopt, 1}; }

  bool is_monomial() const { return !trail.has_value(); }
  Polynomial to_polynomial() const;

  friend bool operator==(const SignedBinomial&, const SignedBinomial&) = default;
  friend auto operator<=>(const SignedBinomial&, const SignedBinomial&) = default;
};

/// Monomial on the points given by index.
Monomial monomial_of(const Shape& shape, std::initializer_list<Point> points);
Monomial monomial_of(const Shape& shape, std::span<const Point> points);
/// Points of a monomial with multiplicity, decreasing.
std::vector<Point> points_of(const Shape& shape, const Monomial& m);

// Text format: terms like "3/2*x_(1,2)*x_(2,1)^2" joined by " + " / " - ".
// Unit coefficients are omitted; the zero polynomial prints as "0".
std::string to_text(const Polynomial& p, const Shape& shape);
std::string to_text(const Monomial& m, const Shape& shape);
Polynomial parse_polynomial(std::string_view text, const Shape& shape);
/// "(1,1)(2,2)" or "x_(1,1)*x_(2,2)"
Monomial parse_monomial(std::string_view text, const Shape& shape);

/// Macaulay2 spelling: x_1_2_1*x_2_1_1 + ...
std::string to_m2(const Polynomial& p, const Shape& shape);
std::string m2_variable(const Point& p);

}  // namespace permideal
