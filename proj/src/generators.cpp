#include "permideal/generators.hpp"

#include <algorithm>

#include "permideal/errors.hpp"

namespace permideal {

const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::I_t: return "I";
    case FamilyKind::J_t: return "J";
    case FamilyKind::Jhat_t: return "hatJ";
    case FamilyKind::Jhat_monomial: return "hatJ-monomial";
    case FamilyKind::Jcheck_t: return "checkJ";
    case FamilyKind::G_set: return "G";
  }
  return "?";
}

std::vector<Polynomial> GeneratorFamily::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.to_polynomial());
  return out;
}

namespace {

std::pair<Monomial, Monomial> products(const Shape& shape, AxisSet K, const Point& a, const Point& b) {
  return {monomial_of(shape, {a, b}), monomial_of(shape, {switch_point(K, a, b), switch_point(K, b, a)})};
}

void canonicalize(std::vector<SignedBinomial>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::optional<SignedBinomial> f_gen(const Shape& shape, AxisSet K, const Point& a, const Point& b) {
  auto [m1, m2] = products(shape, K, a, b);
  return SignedBinomial::make(m1, m2, 1);
}

std::optional<SignedBinomial> g_gen(const Shape& shape, AxisSet K, const Point& a, const Point& b) {
  auto [m1, m2] = products(shape, K, a, b);
  return SignedBinomial::make(m1, m2, -1);
}

Polynomial f_polynomial(const Shape& shape, AxisSet K, const Point& a, const Point& b) {
  auto [m1, m2] = products(shape, K, a, b);
  Polynomial p(m1);
  p.add_term(m2, -1);
  return p;
}

Polynomial g_polynomial(const Shape& shape, AxisSet K, const Point& a, const Point& b) {
  auto [m1, m2] = products(shape, K, a, b);
  Polynomial p(m1);
  p.add_term(m2, 1);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_at_distance(const Shape& shape, int d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& pts = shape.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (distance(pts[i], pts[j]) == d) out.emplace_back(i, j);
  return out;
}

GeneratorFamily slice_ideal(const Shape& shape, FamilyKind kind) {
  if (kind != FamilyKind::I_t && kind != FamilyKind::J_t)
    throw InvalidArgument("slice_ideal needs kind I_t or J_t");
  GeneratorFamily fam{kind, shape, {}};
  for (auto [i, j] : pairs_at_distance(shape, 2)) {
    const Point& a = shape.point(i);
    const Point& b = shape.point(j);
    for (int ax : t_distance(shape.t(), a, b).axes.axes()) {
      auto e = kind == FamilyKind::I_t ? f_gen(shape, {ax}, a, b) : g_gen(shape, {ax}, a, b);
      if (e) fam.elements.push_back(*e);
    }
  }
  canonicalize(fam.elements);
  return fam;
}

GeneratorFamily G_set(const Shape& shape, AxisSet L, AxisSet K) {
  if (!K.subset_of(L)) throw InvalidArgument("G_{L,K} needs K to be a subset of L");
  if (!L.subset_of(shape.all_axes())) throw InvalidAxis("L exceeds the axes of the shape");
  GeneratorFamily fam{FamilyKind::G_set, shape, {}};
  if (L.empty()) return fam;
  for (auto [i, j] : pairs_at_distance(shape, L.size())) {
    const Point& a = shape.point(i);
    const Point& b = shape.point(j);
    if (difference_axes(a, b) != L) continue;
    if (auto e = g_gen(shape, K, a, b)) fam.elements.push_back(*e);
  }
  canonicalize(fam.elements);
  return fam;
}

namespace {

// Pairs with d = d_t = 3.
template <class F>
void for_each_far_pair(const Shape& shape, F&& fn) {
  if (shape.t() < 3) return;
  for (auto [i, j] : pairs_at_distance(shape, 3)) {
    const Point& a = shape.point(i);
    const Point& b = shape.point(j);
    TDistance td = t_distance(shape.t(), a, b);
    if (td.count == 3) fn(a, b, td.axes);
  }
}

}  // namespace

GeneratorFamily hatJ_ideal(const Shape& shape) {
  GeneratorFamily fam{FamilyKind::Jhat_t, shape, {}};
  for_each_far_pair(shape, [&](const Point& a, const Point& b, AxisSet D) {
    for (int ax : D.axes())
      if (auto e = g_gen(shape, {ax}, a, b)) fam.elements.push_back(*e);
  });
  canonicalize(fam.elements);
  return fam;
}

GeneratorFamily hatJ_monomial_form(const Shape& shape) {
  GeneratorFamily fam{FamilyKind::Jhat_monomial, shape, {}};
  for_each_far_pair(shape, [&](const Point& a, const Point& b, AxisSet) {
    fam.elements.push_back(SignedBinomial::monomial(monomial_of(shape, {a, b})));
  });
  canonicalize(fam.elements);
  return fam;
}

GeneratorFamily checkJ_ideal(const Shape& shape) {
  GeneratorFamily fam{FamilyKind::Jcheck_t, shape, slice_ideal(shape, FamilyKind::J_t).elements};
  auto hat = hatJ_ideal(shape).elements;
  fam.elements.insert(fam.elements.end(), hat.begin(), hat.end());
  canonicalize(fam.elements);
  return fam;
}

}  // namespace permideal
