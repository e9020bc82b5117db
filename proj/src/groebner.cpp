#include "permideal/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "permideal/errors.hpp"

namespace permideal {

namespace {

const Polynomial* find_divisor(const Monomial& m, const std::vector<Polynomial>& divisors, std::size_t& which) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i].leading_monomial().divides(m)) {
      which = i;
      return &divisors[i];
    }
  }
  return nullptr;
}

void check_nonzero(const std::vector<Polynomial>& divisors) {
  for (const auto& g : divisors)
    if (g.is_zero()) throw InvalidArgument("zero divisor in reduction");
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  check_nonzero(divisors);
  DivisionResult out;
  out.quotients.resize(divisors.size());
  Polynomial p = f;
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial();
    Rational lc = p.leading_coefficient();
    std::size_t i = 0;
    if (const Polynomial* g = find_divisor(lm, divisors, i)) {
      Monomial q = lm.quotient(g->leading_monomial());
      Rational c = lc / g->leading_coefficient();
      p -= g->times(q, c);
      out.quotients[i].add_term(q, c);
    } else {
      out.remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  check_nonzero(divisors);
  Polynomial r;
  Polynomial p = f;
  while (!p.is_zero()) {
    Monomial lm = p.leading_monomial();
    Rational lc = p.leading_coefficient();
    std::size_t i = 0;
    if (const Polynomial* g = find_divisor(lm, divisors, i)) {
      p -= g->times(lm.quotient(g->leading_monomial()), lc / g->leading_coefficient());
    } else {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.times(l.quotient(f.leading_monomial()), 1 / f.leading_coefficient()) -
         g.times(l.quotient(g.leading_monomial()), 1 / g.leading_coefficient());
}

namespace {

struct Pair {
  unsigned degree;
  Monomial lcm;
  std::size_t i, j;
  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.lcm, a.i, a.j) < std::tie(b.degree, b.lcm, b.i, b.j);
  }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  // drop elements whose lead is divisible by another lead
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    const Polynomial& g = minimal[k];
    Polynomial tail = g;
    tail.add_term(g.leading_monomial(), -g.leading_coefficient());
    Polynomial r(g.leading_monomial(), g.leading_coefficient());
    r += others.empty() ? tail : reduce(tail, others);
    reduced.push_back(r.monic());
  }
  return reduced;
}

}  // namespace

GroebnerResult buchberger(const std::vector<Polynomial>& generators, std::optional<unsigned> degree_cap) {
  GroebnerResult result;
  result.cap = degree_cap;
  result.homogeneous = std::all_of(generators.begin(), generators.end(),
                                   [](const Polynomial& p) { return p.is_homogeneous(); });

  std::vector<Polynomial>& G = result.basis;
  std::set<Pair> pairs;
  auto done = [&](std::size_t a, std::size_t b, const std::set<std::pair<std::size_t, std::size_t>>& open) {
    return !open.count({std::min(a, b), std::max(a, b)});
  };
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto add = [&](Polynomial p) {
    p = p.monic();
    const std::size_t k = G.size();
    G.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = G[i].leading_monomial().lcm(G[k].leading_monomial());
      pairs.insert({l.degree(), l, i, k});
      open.insert({i, k});
    }
  };

  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = G.empty() ? g : reduce(g, G);
    if (!r.is_zero()) add(r);
  }

  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    open.erase({pr.i, pr.j});
    if (degree_cap && pr.degree > *degree_cap) {
      result.truncated = true;
      continue;
    }
    const Monomial& li = G[pr.i].leading_monomial();
    const Monomial& lj = G[pr.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].leading_monomial().divides(pr.lcm) && done(pr.i, k, open) && done(pr.j, k, open)) chain = true;
    }
    if (chain) continue;
    Polynomial r = reduce(s_polynomial(G[pr.i], G[pr.j]), G);
    if (!r.is_zero()) add(std::move(r));
  }

  if (!result.truncated) G = interreduce(std::move(G));
  return result;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    default: return "unknown";
  }
}

Membership ideal_member(const Polynomial& f, const GroebnerResult& gb) {
  if (f.is_zero()) return Membership::yes;
  if (gb.basis.empty()) return Membership::no;
  if (reduce(f, gb.basis).is_zero()) return Membership::yes;
  if (!gb.truncated) return Membership::no;
  if (gb.homogeneous && gb.cap && f.degree() <= *gb.cap) return Membership::no;
  return Membership::unknown;
}

Membership ideal_member(const Polynomial& f, const std::vector<Polynomial>& generators,
                        std::optional<unsigned> degree_cap) {
  return ideal_member(f, buchberger(generators, degree_cap));
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> G;
  for (const auto& g : basis)
    if (!g.is_zero()) G.push_back(g);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].leading_monomial().coprime(G[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  return true;
}

}  // namespace permideal
