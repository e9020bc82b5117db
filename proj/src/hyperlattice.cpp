#include "permideal/hyperlattice.hpp"

#include <cctype>
#include <charconv>

#include "permideal/errors.hpp"

namespace permideal {

namespace {

void check_axis(int axis) {
  if (axis < 1 || axis > 32) throw InvalidAxis("axis " + std::to_string(axis) + " out of range");
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc()) throw ParseError("expected integer in '" + std::string(text) + "'");
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

AxisSet::AxisSet(std::initializer_list<int> axes) {
  for (int a : axes) {
    check_axis(a);
    bits_ |= 1u << (a - 1);
  }
}

AxisSet AxisSet::first(int k) {
  if (k < 0 || k > 32) throw InvalidAxis("axis count " + std::to_string(k) + " out of range");
  return from_bits(k == 32 ? ~0u : ((1u << k) - 1));
}

bool AxisSet::contains(int axis) const {
  if (axis < 1 || axis > 32) return false;
  return (bits_ >> (axis - 1)) & 1u;
}

AxisSet AxisSet::with(int axis) const {
  check_axis(axis);
  return from_bits(bits_ | (1u << (axis - 1)));
}

AxisSet AxisSet::without(int axis) const {
  check_axis(axis);
  return from_bits(bits_ & ~(1u << (axis - 1)));
}

int AxisSet::max_axis() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

std::vector<int> AxisSet::axes() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

Shape::Shape(std::vector<int> radices, int t) : radices_(std::move(radices)), t_(t) {
  if (radices_.empty()) throw InvalidArgument("shape needs at least one axis");
  if (radices_.size() > 32) throw InvalidArgument("at most 32 axes are supported");
  for (int r : radices_)
    if (r < 1) throw InvalidArgument("radices must be positive");
  if (t_ < 1 || t_ > n()) throw InvalidArgument("t must satisfy 1 <= t <= n");

  std::size_t total = 1;
  for (int r : radices_) {
    total *= static_cast<std::size_t>(r);
    if (total > (1u << 24)) throw InvalidArgument("shape too large");
  }
  strides_.assign(radices_.size(), 1);
  for (std::size_t i = radices_.size() - 1; i > 0; --i)
    strides_[i - 1] = strides_[i] * static_cast<std::size_t>(radices_[i]);

  points_.reserve(total);
  std::vector<int> c(radices_.size(), 1);
  for (std::size_t k = 0; k < total; ++k) {
    points_.emplace_back(c);
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] < radices_[i]) {
        ++c[i];
        break;
      }
      c[i] = 1;
    }
  }
}

bool Shape::contains(const Point& p) const {
  if (p.n() != n()) return false;
  for (int i = 1; i <= n(); ++i)
    if (p.on(i) < 1 || p.on(i) > radix(i)) return false;
  return true;
}

std::size_t Shape::index(const Point& p) const {
  if (!contains(p)) throw InvalidArgument("point " + format_point(p) + " not in shape");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i)
    idx += static_cast<std::size_t>(p.coords()[i] - 1) * strides_[i];
  return idx;
}

std::size_t Shape::tail_count() const {
  std::size_t c = 1;
  for (int i = t_ + 1; i <= n(); ++i) c *= static_cast<std::size_t>(radix(i));
  return c;
}

Point switch_point(AxisSet L, const Point& a, const Point& b) {
  if (a.n() != b.n()) throw InvalidArgument("points of different length");
  if (L.max_axis() > a.n()) throw InvalidAxis("axis " + std::to_string(L.max_axis()) + " exceeds n");
  Point out = a;
  for (int i : L.axes()) out.set(i, b.on(i));
  return out;
}

int distance(const Point& a, const Point& b) { return difference_axes(a, b).size(); }

AxisSet difference_axes(const Point& a, const Point& b) {
  if (a.n() != b.n()) throw InvalidArgument("points of different length");
  std::uint32_t bits = 0;
  for (int i = 1; i <= a.n(); ++i)
    if (a.on(i) != b.on(i)) bits |= 1u << (i - 1);
  return AxisSet::from_bits(bits);
}

TDistance t_distance(int t, const Point& a, const Point& b) {
  AxisSet d = difference_axes(a, b) & AxisSet::first(t);
  return {d.size(), d};
}

CollapsedPoint collapse(const Shape& shape, const Point& a) {
  if (!shape.contains(a)) throw InvalidArgument("point " + format_point(a) + " not in shape");
  CollapsedPoint c;
  c.head.assign(a.coords().begin(), a.coords().begin() + shape.t());
  int rank = 0;
  for (int i = shape.t() + 1; i <= shape.n(); ++i) rank = rank * shape.radix(i) + (a.on(i) - 1);
  c.tail = rank + 1;
  return c;
}

Point uncollapse(const Shape& shape, const CollapsedPoint& c) {
  if (static_cast<int>(c.head.size()) != shape.t()) throw InvalidArgument("collapsed head has wrong length");
  if (c.tail < 1 || static_cast<std::size_t>(c.tail) > shape.tail_count())
    throw InvalidArgument("collapsed tail out of range");
  std::vector<int> coords(c.head);
  coords.resize(static_cast<std::size_t>(shape.n()));
  int rank = c.tail - 1;
  for (int i = shape.n(); i > shape.t(); --i) {
    coords[static_cast<std::size_t>(i - 1)] = rank % shape.radix(i) + 1;
    rank /= shape.radix(i);
  }
  Point p(std::move(coords));
  if (!shape.contains(p)) throw InvalidArgument("collapsed head out of range");
  return p;
}

int collapsed_entry(const Shape& shape, const CollapsedPoint& c, int i) {
  if (i <= shape.t()) return c.head[static_cast<std::size_t>(i - 1)];
  return c.tail;
}

std::string format_point(const Point& p) {
  std::string s = "(";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p.on(i));
  }
  s += ')';
  return s;
}

Point parse_point(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '(') throw ParseError("point must start with '(': " + std::string(text));
  ++pos;
  std::vector<int> coords;
  while (true) {
    coords.push_back(read_int(text, pos));
    skip_space(text, pos);
    if (pos >= text.size()) throw ParseError("unterminated point: " + std::string(text));
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    if (text[pos] != ',') throw ParseError("expected ',' in point: " + std::string(text));
    ++pos;
  }
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after point: " + std::string(text));
  return Point(std::move(coords));
}

std::vector<int> parse_radices(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    out.push_back(read_int(text, pos));
    skip_space(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',' && text[pos] != 'x') throw ParseError("bad shape: " + std::string(text));
    ++pos;
  }
  return out;
}

std::string format_radices(const std::vector<int>& radices) {
  std::string s;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(radices[i]);
  }
  return s;
}

}  // namespace permideal
