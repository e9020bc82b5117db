#include "permideal/radical.hpp"

#include <algorithm>
#include <map>

#include "permideal/prime_structure.hpp"

namespace permideal {

bool in_M(PointSet u, const std::vector<PointSet>& maximal) {
  return std::none_of(maximal.begin(), maximal.end(), [u](PointSet s) { return (u & s) == u; });
}

bool radical_monomial_member(const Monomial& m, const std::vector<PointSet>& maximal) {
  PointSet u = 0;
  for (const auto& [v, e] : m.factors()) u |= bit(v);
  return in_M(u, maximal);
}

std::vector<PointSet> M3_sets(const LatticeTables& tb, const std::vector<PointSet>& maximal) {
  std::vector<PointSet> out;
  const std::size_t N = tb.size();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        PointSet u = bit(i) | bit(j) | bit(k);
        if (in_M(u, maximal)) out.push_back(u);
      }
  return out;
}

namespace {

void extend(std::size_t variables, unsigned degree, Var top, std::vector<Var>& cur, std::vector<Monomial>& out) {
  if (cur.size() == degree) {
    out.push_back(Monomial::product(cur));
    return;
  }
  for (Var v = top + 1; v-- > 0;) {
    cur.push_back(v);
    extend(variables, degree, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned degree) {
  std::vector<Monomial> out;
  if (variables == 0) return degree == 0 ? std::vector<Monomial>{Monomial()} : out;
  std::vector<Var> cur;
  extend(variables, degree, static_cast<Var>(variables - 1), cur, out);
  return out;
}

std::vector<SignedBinomial> bounded_radical_binomials(const LatticeTables& tb, const std::vector<PointSet>& maximal,
                                                      unsigned degree_cap) {
  std::vector<SignedSet> sets;
  std::vector<Reducer> reducers;
  sets.reserve(maximal.size());
  for (PointSet s : maximal) {
    sets.emplace_back(tb, s);
    reducers.push_back(Reducer(Q_ideal(sets.back())));
  }

  std::vector<SignedBinomial> out;
  for (unsigned d = 2; d <= degree_cap; ++d) {
    // Monomials grouped by their vector of normal forms up to a global sign.
    std::map<std::vector<std::pair<bool, Monomial>>, std::vector<std::pair<Monomial, std::vector<int>>>> groups;
    for (const Monomial& m : monomials_of_degree(tb.size(), d)) {
      std::vector<std::pair<bool, Monomial>> key;
      std::vector<int> signs;
      bool all_zero = true;
      for (const Reducer& r : reducers) {
        NormalForm nf = r.normal_form(m);
        key.emplace_back(nf.zero, nf.monomial);
        signs.push_back(nf.zero ? 0 : nf.sign);
        all_zero = all_zero && nf.zero;
      }
      if (all_zero) continue;
      groups[key].emplace_back(m, signs);
    }
    for (const auto& [key, members] : groups) {
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          // x_M - eps x_M' lies in Q_j iff sigma_j(M) = eps sigma_j(M') wherever nonzero.
          int eps = 0;
          bool ok = true;
          for (std::size_t j = 0; j < members[x].second.size() && ok; ++j) {
            const int sx = members[x].second[j], sy = members[y].second[j];
            if (sx == 0) continue;
            const int need = sx * sy;
            if (eps == 0)
              eps = need;
            else
              ok = eps == need;
          }
          if (!ok) continue;
          if (auto b = SignedBinomial::make(members[x].first, members[y].first, eps)) out.push_back(*b);
        }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace permideal
