#include "permideal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "permideal/errors.hpp"

namespace permideal {

Monomial Monomial::variable(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::product(std::span<const Var> vars) {
  std::vector<Var> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Monomial m;
  for (Var v : sorted) {
    if (!m.factors_.empty() && m.factors_.back().first == v)
      ++m.factors_.back().second;
    else
      m.factors_.emplace_back(v, 1);
  }
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

std::vector<Var> Monomial::expand() const {
  std::vector<Var> out;
  for (const auto& [v, e] : factors_) out.insert(out.end(), e, v);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first > v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first == b->first) return false;
    if (a->first > b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial out;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (sub > e) throw InvalidArgument("monomial quotient is not exact");
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  if (b != other.factors_.end()) throw InvalidArgument("monomial quotient is not exact");
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first > b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first > a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial out;
  auto a = x.factors_.begin();
  auto b = y.factors_.begin();
  while (a != x.factors_.end() || b != y.factors_.end()) {
    if (b == y.factors_.end() || (a != x.factors_.end() && a->first > b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == x.factors_.end() || b->first > a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& [v, e] : m.factors()) {
    h ^= (static_cast<std::size_t>(v) << 8) ^ e;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b) { return a <=> b; }

Polynomial::Polynomial(Monomial m, Rational c) {
  // Callers may hand in unreduced fractions such as 2/2.
  c.canonicalize();
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint32_t d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (c.get_den() != 1) {
    // GMP arithmetic assumes reduced fractions.
    Rational r = c;
    r.canonicalize();
    add_canonical(m, r);
  } else {
    add_canonical(m, c);
  }
}

void Polynomial::add_canonical(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return times(Monomial(), inv);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [m, c] : b.terms()) out += a.times(m, c);
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

std::optional<SignedBinomial> SignedBinomial::make(const Monomial& m1, const Monomial& m2, int eps) {
  if (eps != 1 && eps != -1) throw InvalidArgument("binomial sign must be +1 or -1");
  if (m1 == m2) {
    if (eps == 1) return std::nullopt;
    return SignedBinomial::monomial(m1);
  }
  // m1 - eps*m2 and m2 - eps*m1 differ by the unit -eps.
  if (m1 > m2) return SignedBinomial{m1, m2, eps};
  return SignedBinomial{m2, m1, eps};
}

Polynomial SignedBinomial::to_polynomial() const {
  Polynomial p(lead, 1);
  if (trail) p.add_term(*trail, -sign);
  return p;
}

Monomial monomial_of(const Shape& shape, std::span<const Point> points) {
  std::vector<Var> vars;
  vars.reserve(points.size());
  for (const Point& p : points) vars.push_back(static_cast<Var>(shape.index(p)));
  return Monomial::product(vars);
}

Monomial monomial_of(const Shape& shape, std::initializer_list<Point> points) {
  return monomial_of(shape, std::span<const Point>(points.begin(), points.size()));
}

std::vector<Point> points_of(const Shape& shape, const Monomial& m) {
  std::vector<Point> out;
  for (Var v : m.expand()) out.push_back(shape.point(v));
  return out;
}

namespace {

std::string format_monomial(const Monomial& m, const Shape& shape) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += "x_" + format_point(shape.point(v));
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  Point point() {
    skip();
    std::size_t start = pos_;
    std::size_t close = text_.find(')', pos_);
    if (close == std::string_view::npos) fail("unterminated point");
    pos_ = close + 1;
    return parse_point(text_.substr(start, close + 1 - start));
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// factor := "x_" point ["^" digits]
void read_factor(Lexer& lx, const Shape& shape, std::vector<Var>& vars) {
  lx.expect('x');
  lx.expect('_');
  Var v = static_cast<Var>(shape.index(lx.point()));
  unsigned e = 1;
  if (lx.accept('^')) e = static_cast<unsigned>(std::stoul(lx.digits()));
  vars.insert(vars.end(), e, v);
}

}  // namespace

std::string to_text(const Monomial& m, const Shape& shape) {
  return m.is_one() ? "1" : format_monomial(m, shape);
}

std::string to_text(const Polynomial& p, const Shape& shape) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    Rational mag = abs(c);
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += format_monomial(m, shape);
    }
  }
  return s;
}

Polynomial parse_polynomial(std::string_view text, const Shape& shape) {
  Lexer lx(text);
  Polynomial p;
  if (lx.peek() == '0') {
    // A lone "0" is the zero polynomial; otherwise a coefficient starting with 0.
    Lexer probe(text);
    probe.digits();
    if (probe.done()) return p;
  }
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (!lx.accept('+') && !first)
      lx.fail("expected '+' or '-'");
    first = false;

    Rational coef = 1;
    std::vector<Var> vars;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.digits();
      if (lx.accept('/')) num += "/" + lx.digits();
      coef = Rational(num);
      coef.canonicalize();
      if (lx.accept('*')) read_factor(lx, shape, vars);
    } else {
      read_factor(lx, shape, vars);
    }
    while (lx.accept('*')) read_factor(lx, shape, vars);
    p.add_term(Monomial::product(vars), sign * coef);
  }
  return p;
}

Monomial parse_monomial(std::string_view text, const Shape& shape) {
  Lexer lx(text);
  std::vector<Var> vars;
  if (lx.peek() == '(') {
    while (!lx.done()) vars.push_back(static_cast<Var>(shape.index(lx.point())));
    return Monomial::product(vars);
  }
  if (lx.peek() == '1') {
    lx.digits();
    if (lx.done()) return Monomial();
    lx.fail("unexpected text after 1");
  }
  read_factor(lx, shape, vars);
  while (lx.accept('*')) read_factor(lx, shape, vars);
  if (!lx.done()) lx.fail("unexpected text in monomial");
  return Monomial::product(vars);
}

std::string m2_variable(const Point& p) {
  std::string s = "x";
  for (int c : p.coords()) s += "_" + std::to_string(c);
  return s;
}

std::string to_m2(const Polynomial& p, const Shape& shape) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? "-" : "+";
    first = false;
    Rational mag = abs(c);
    std::string mono;
    for (const auto& [v, e] : m.factors()) {
      if (!mono.empty()) mono += '*';
      mono += m2_variable(shape.point(v));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      s += mag.get_str();
    else if (mag != 1)
      s += mag.get_str() + "*" + mono;
    else
      s += mono;
  }
  return s;
}

}  // namespace permideal
