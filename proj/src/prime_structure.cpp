#include "permideal/prime_structure.hpp"

#include <algorithm>
#include <map>

#include "permideal/errors.hpp"
#include "permideal/groebner.hpp"

namespace permideal {

SignedSet::SignedSet(const LatticeTables& tb, PointSet s) : tb_(&tb), mask_(s) {
  SignedClassification cls = classify_signed(tb, s);
  if (!cls.is_t_signed()) throw NotSigned(format_set(tb, s) + " is not t-signed: " + cls.witness(tb.shape()));
  const std::size_t N = tb.size();
  pl_.assign(N * N, -1);
  for (std::size_t a : tb.indices_of(s)) {
    auto d = bfs_distances(tb, s, a);
    std::copy(d.begin(), d.end(), pl_.begin() + static_cast<std::ptrdiff_t>(a * N));
  }
}

bool SignedSet::connected(const Point& a, const Point& b) const {
  return connected(shape().index(a), shape().index(b));
}

int SignedSet::pl(std::size_t a, std::size_t b) const {
  int d = pl_[a * tb_->size() + b];
  if (d < 0)
    throw NotConnected(format_point(shape().point(a)) + " and " + format_point(shape().point(b)) +
                       " are not connected in " + format_set(*tb_, mask_));
  return d;
}

int SignedSet::pl(const Point& a, const Point& b) const { return pl(shape().index(a), shape().index(b)); }

std::optional<SignedBinomial> h_gen(const SignedSet& s, AxisSet K, const Point& a, const Point& b) {
  const Shape& sh = s.shape();
  if (!K.subset_of(t_distance(sh.t(), a, b).axes))
    throw InvalidArgument("K must lie in the axes of [t] where a and b differ");
  const int e = K.size() * s.ipl(a, b);
  const Monomial m1 = monomial_of(sh, {a, b});
  const Monomial m2 = monomial_of(sh, {switch_point(K, a, b), switch_point(K, b, a)});
  return SignedBinomial::make(m1, m2, e % 2 == 0 ? 1 : -1);
}

namespace {

template <class F>
void for_each_connected_pair(const SignedSet& s, F&& fn) {
  const auto idx = s.tables().indices_of(s.mask());
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      if (s.connected(idx[x], idx[y])) fn(s.shape().point(idx[x]), s.shape().point(idx[y]));
}

void canonicalize(std::vector<SignedBinomial>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<SignedBinomial> tilde_J_generators(const SignedSet& s) {
  std::vector<SignedBinomial> out;
  for_each_connected_pair(s, [&](const Point& a, const Point& b) {
    for (int i : t_distance(s.shape().t(), a, b).axes.axes())
      if (auto h = h_gen(s, {i}, a, b)) out.push_back(*h);
  });
  canonicalize(out);
  return out;
}

std::vector<SignedBinomial> tilde_G(const SignedSet& s) {
  std::vector<SignedBinomial> out;
  for_each_connected_pair(s, [&](const Point& a, const Point& b) {
    const std::uint32_t D = t_distance(s.shape().t(), a, b).axes.bits();
    // nonempty submasks of D
    for (std::uint32_t k = D; k; k = (k - 1) & D)
      if (auto h = h_gen(s, AxisSet::from_bits(k), a, b)) out.push_back(*h);
  });
  canonicalize(out);
  return out;
}

std::vector<Polynomial> IdealPresentation::polynomials(const Shape& shape) const {
  std::vector<Polynomial> out;
  for (const Point& p : variables) out.emplace_back(Monomial::variable(static_cast<Var>(shape.index(p))));
  for (const auto& b : binomials) out.push_back(b.to_polynomial());
  return out;
}

IdealPresentation variable_ideal(const LatticeTables& tb, PointSet s) {
  IdealPresentation q;
  q.support = s;
  q.t = tb.shape().t();
  q.groebner = true;
  q.variables = tb.points_of(tb.full() & ~s);
  return q;
}

IdealPresentation groebner_G(const SignedSet& s) {
  IdealPresentation q = variable_ideal(s.tables(), s.mask());
  q.binomials = tilde_G(s);
  return q;
}

IdealPresentation Q_ideal(const SignedSet& s) {
  IdealPresentation g = groebner_G(s);
  Reducer red(g);
  IdealPresentation q = variable_ideal(s.tables(), s.mask());
  std::vector<Monomial> leads;
  for (const auto& b : g.binomials) leads.push_back(b.lead);
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  for (const Monomial& L : leads) {
    NormalForm nf = red.normal_form(L);
    if (nf.zero) {
      q.binomials.push_back(SignedBinomial::monomial(L));
    } else if (auto e = SignedBinomial::make(L, nf.monomial, nf.sign)) {
      q.binomials.push_back(*e);
    }
  }
  canonicalize(q.binomials);
  return q;
}

IdealPresentation Q_generators(const SignedSet& s) {
  IdealPresentation q = variable_ideal(s.tables(), s.mask());
  q.groebner = false;
  q.binomials = tilde_J_generators(s);
  return q;
}

Reducer::Reducer(PointSet support, std::vector<SignedBinomial> basis)
    : support_(support), basis_(std::move(basis)) {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k].lead.degree() == 2)
      quadratic_[basis_[k].lead].push_back(k);
    else
      other_.push_back(k);
  }
}

Reducer::Reducer(const IdealPresentation& q) : Reducer(q.support, q.binomials) {}

bool Reducer::outside_support(const Monomial& m) const {
  for (const auto& [v, e] : m.factors())
    if (!has(support_, v)) return true;
  return false;
}

std::vector<std::size_t> Reducer::applicable(const Monomial& m) const {
  std::vector<std::size_t> out;
  const auto& f = m.factors();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x].second >= 2) {
      auto it = quadratic_.find(Monomial::variable(f[x].first, 2));
      if (it != quadratic_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
    for (std::size_t y = x + 1; y < f.size(); ++y) {
      auto it = quadratic_.find(Monomial::product({f[x].first, f[y].first}));
      if (it != quadratic_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  for (std::size_t k : other_)
    if (basis_[k].lead.divides(m)) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Pick>
NormalForm run_reduction(const Monomial& m0, const std::vector<SignedBinomial>& basis, Pick&& pick) {
  NormalForm nf{false, 1, m0};
  while (true) {
    std::optional<std::size_t> k = pick(nf.monomial);
    if (!k) return nf;
    const SignedBinomial& b = basis[*k];
    if (!b.trail) return NormalForm{true, 1, Monomial()};
    nf.monomial = nf.monomial.quotient(b.lead) * *b.trail;
    nf.sign *= b.sign;
  }
}

}  // namespace

NormalForm Reducer::normal_form(const Monomial& m) const {
  if (outside_support(m)) return NormalForm{true, 1, Monomial()};
  return run_reduction(m, basis_, [&](const Monomial& cur) -> std::optional<std::size_t> {
    auto app = applicable(cur);
    if (app.empty()) return std::nullopt;
    return app.front();
  });
}

NormalForm Reducer::normal_form(const Monomial& m, std::mt19937_64& rng) const {
  if (outside_support(m)) return NormalForm{true, 1, Monomial()};
  return run_reduction(m, basis_, [&](const Monomial& cur) -> std::optional<std::size_t> {
    auto app = applicable(cur);
    if (app.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, app.size() - 1);
    return app[pick(rng)];
  });
}

Polynomial Reducer::reduce(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    NormalForm nf = normal_form(m);
    if (!nf.zero) out.add_term(nf.monomial, nf.sign * c);
  }
  return out;
}

bool Reducer::reduces_to_zero(const SignedBinomial& b) const {
  NormalForm x = normal_form(b.lead);
  if (!b.trail) return x.zero;
  NormalForm y = normal_form(*b.trail);
  if (x.zero || y.zero) return x.zero && y.zero;
  return x.monomial == y.monomial && x.sign == b.sign * y.sign;
}

namespace {

struct Collapsed {
  std::vector<int> e;  // entries 1..t+1, 0-based storage
};

Collapsed collapsed_tuple(const Shape& shape, const Point& p) {
  CollapsedPoint c = collapse(shape, p);
  Collapsed out{c.head};
  out.e.push_back(c.tail);
  return out;
}

int smallest_difference(const Collapsed& a, const Collapsed& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return static_cast<int>(i) + 1;
  return static_cast<int>(a.e.size()) + 1;
}

int sgn(int x) { return (x > 0) - (x < 0); }

int formula_branch(const Shape& shape, const Point& a, const Point& b, const Collapsed& ca, const Collapsed& cb) {
  const int t = shape.t();
  const int target = 2 * (cb.e[t] - ca.e[t]) + 1 > 0 ? 1 : -1;  // sgn(b~_{t+1} - a~_{t+1} + 0.5)
  int count = 0;
  for (int i = 1; i <= t; ++i)
    if (sgn(a.on(i) - b.on(i)) == target) ++count;
  return count - 1;
}

Point assemble(const Shape& shape, const Collapsed& ca, const Collapsed& cb, bool max_first) {
  const int l = smallest_difference(ca, cb);
  const int t = shape.t();
  CollapsedPoint out;
  for (int i = 1; i <= t + 1; ++i) {
    const int x = ca.e[static_cast<std::size_t>(i - 1)], y = cb.e[static_cast<std::size_t>(i - 1)];
    const bool take_max = (i <= l) == max_first;
    const int v = take_max ? std::max(x, y) : std::min(x, y);
    if (i <= t)
      out.head.push_back(v);
    else
      out.tail = v;
  }
  return uncollapse(shape, out);
}

}  // namespace

std::optional<int> big_difference_formula(const Shape& shape, const Point& a, const Point& b) {
  Collapsed ca = collapsed_tuple(shape, a), cb = collapsed_tuple(shape, b);
  const int t = shape.t();
  const int l = smallest_difference(ca, cb);
  if (l == t + 2) return std::nullopt;
  const std::size_t li = static_cast<std::size_t>(l - 1);
  if (ca.e[static_cast<std::size_t>(t)] != cb.e[static_cast<std::size_t>(t)] || ca.e[li] > cb.e[li])
    return formula_branch(shape, a, b, ca, cb);
  return formula_branch(shape, b, a, cb, ca);
}

BigDifference big_difference(const Shape& shape, const Point& a, const Point& b) {
  Collapsed ca = collapsed_tuple(shape, a), cb = collapsed_tuple(shape, b);
  BigDifference out;
  out.l = smallest_difference(ca, cb);
  // For l >= t+1 the pair is already reduced and D is 0; the formula would give -1 at l = t+1.
  out.D = out.l >= shape.t() + 1 ? 0 : *big_difference_formula(shape, a, b);
  return out;
}

Point max_min(const Shape& shape, const Point& a, const Point& b) {
  return assemble(shape, collapsed_tuple(shape, a), collapsed_tuple(shape, b), true);
}

Point min_max(const Shape& shape, const Point& a, const Point& b) {
  return assemble(shape, collapsed_tuple(shape, a), collapsed_tuple(shape, b), false);
}

NormalForm quad_normal_form(const SignedSet& s, const Point& a, const Point& b) {
  const Shape& sh = s.shape();
  if (!s.contains(a) || !s.contains(b)) return NormalForm{true, 1, Monomial()};
  if (!s.connected(a, b)) return NormalForm{false, 1, monomial_of(sh, {a, b})};
  const int D = big_difference(sh, a, b).D;
  const int e = D * s.ipl(a, b);
  return NormalForm{false, e % 2 == 0 ? 1 : -1, monomial_of(sh, {max_min(sh, a, b), min_max(sh, a, b)})};
}

SignLedger sign_ledger(const SignedSet& s, const Point& a, const Point& b, const Point& c, const Point& A,
                       const Point& B, const Point& C) {
  (void)C;
  const int t = s.shape().t();
  SignLedger L;
  for (int i = 1; i <= t; ++i) {
    if (A.on(i) == b.on(i) && b.on(i) != a.on(i)) L.K1 = L.K1.with(i);
  }
  for (int i = 1; i <= t; ++i) {
    if (A.on(i) == c.on(i) && c.on(i) != a.on(i) && !L.K1.contains(i)) L.K2 = L.K2.with(i);
  }
  for (int i = 1; i <= t; ++i) {
    const bool in1 = L.K1.contains(i);
    if ((in1 && B.on(i) != a.on(i)) || (!in1 && B.on(i) != b.on(i))) L.K3 = L.K3.with(i);
  }
  const Point a1 = switch_point(L.K1, a, b);
  const Point b1 = switch_point(L.K1, b, a);
  const Point c1 = switch_point(L.K2, c, a);
  const long p = static_cast<long>(L.K1.size()) * s.ipl(a, b) + static_cast<long>(L.K2.size()) * s.ipl(a1, c) +
                 static_cast<long>(L.K3.size()) * s.ipl(b1, c1);
  L.p = static_cast<int>(((p % 2) + 2) % 2);
  return L;
}

std::vector<std::array<Point, 3>> tail_matchings(const Shape& shape, const std::array<Point, 3>& abc,
                                                 const std::array<Point, 3>& target) {
  std::vector<std::array<Point, 3>> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<Point, 3> cand{target[perm[0]], target[perm[1]], target[perm[2]]};
    bool ok = true;
    for (int k = 0; k < 3 && ok; ++k)
      ok = collapse(shape, cand[k]).tail == collapse(shape, abc[k]).tail;
    if (ok && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool ideal_leq(const Shape& shape, const IdealPresentation& q1, const IdealPresentation& q2) {
  if (q2.groebner) {
    Reducer red(q2);
    for (const Point& p : q1.variables)
      if (has(q2.support, shape.index(p))) return false;
    for (const auto& b : q1.binomials)
      if (!red.reduces_to_zero(b)) return false;
    return true;
  }
  GroebnerResult gb = buchberger(q2.polynomials(shape), std::nullopt);
  for (const auto& f : q1.polynomials(shape))
    if (ideal_member(f, gb) != Membership::yes) return false;
  return true;
}

}  // namespace permideal
