#pragma once

// Index combinatorics of an r_1 x ... x r_n hypermatrix: points, axis sets,
// the switch function, distances and the collapsed (t+1)-tuple encoding.
// Coordinates and axes are 1-based everywhere in the public interface.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace permideal {

/// A subset of the axes [n], n <= 32.
class AxisSet {
 public:
  constexpr AxisSet() = default;
  AxisSet(std::initializer_list<int> axes);

  static constexpr AxisSet from_bits(std::uint32_t bits) {
    AxisSet s;
    s.bits_ = bits;
    return s;
  }
  /// The axes {1, ..., k}.
  static AxisSet first(int k);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  bool contains(int axis) const;
  AxisSet with(int axis) const;
  AxisSet without(int axis) const;
  constexpr bool subset_of(AxisSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest axis index present, 0 when empty.
  int max_axis() const;
  std::vector<int> axes() const;

  friend constexpr AxisSet operator|(AxisSet a, AxisSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr AxisSet operator&(AxisSet a, AxisSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr AxisSet operator-(AxisSet a, AxisSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr AxisSet operator^(AxisSet a, AxisSet b) { return from_bits(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(AxisSet, AxisSet) = default;
  friend constexpr auto operator<=>(AxisSet, AxisSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A point of N = [r_1] x ... x [r_n]; coords()[i] is the (1-based) value on axis i+1.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<int> coords) : coords_(coords) {}
  explicit Point(std::vector<int> coords) : coords_(std::move(coords)) {}

  int n() const { return static_cast<int>(coords_.size()); }
  /// Value on a 1-based axis.
  int on(int axis) const { return coords_[static_cast<std::size_t>(axis - 1)]; }
  void set(int axis, int value) { coords_[static_cast<std::size_t>(axis - 1)] = value; }
  const std::vector<int>& coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<int> coords_;
};

struct CollapsedPoint {
  std::vector<int> head;  // first t coordinates
  int tail = 1;           // lex rank of the trailing coordinates, 1-based
  friend bool operator==(const CollapsedPoint&, const CollapsedPoint&) = default;
  friend auto operator<=>(const CollapsedPoint&, const CollapsedPoint&) = default;
};

/// Hypermatrix format plus the slice parameter t. Points are enumerated
/// in lexicographic order; a point's position in that order is its index and
/// doubles as its variable number.
class Shape {
 public:
  Shape(std::vector<int> radices, int t);

  int n() const { return static_cast<int>(radices_.size()); }
  int t() const { return t_; }
  int radix(int axis) const { return radices_[static_cast<std::size_t>(axis - 1)]; }
  const std::vector<int>& radices() const { return radices_; }
  std::size_t size() const { return points_.size(); }

  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t index) const { return points_[index]; }
  std::size_t index(const Point& p) const;
  bool contains(const Point& p) const;

  AxisSet head_axes() const { return AxisSet::first(t_); }
  AxisSet all_axes() const { return AxisSet::first(n()); }
  /// r_{t+1} * ... * r_n, 1 when t = n.
  std::size_t tail_count() const;

  Shape with_t(int t) const { return Shape(radices_, t); }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.radices_ == b.radices_ && a.t_ == b.t_;
  }

 private:
  std::vector<int> radices_;
  int t_;
  std::vector<std::size_t> strides_;
  std::vector<Point> points_;
};

/// s(L,a,b): b's entries on the axes of L, a's elsewhere.
Point switch_point(AxisSet L, const Point& a, const Point& b);

/// Number of axes on which a and b differ.
int distance(const Point& a, const Point& b);

/// Axes where a and b differ.
AxisSet difference_axes(const Point& a, const Point& b);

struct TDistance {
  int count = 0;
  AxisSet axes;
};
/// d_t and D_t: the difference restricted to the axes [t].
TDistance t_distance(int t, const Point& a, const Point& b);

CollapsedPoint collapse(const Shape& shape, const Point& a);
Point uncollapse(const Shape& shape, const CollapsedPoint& c);
/// Entry i (1-based, i <= t+1) of the collapsed tuple.
int collapsed_entry(const Shape& shape, const CollapsedPoint& c, int i);

/// "(1,2,1)"
std::string format_point(const Point& p);
Point parse_point(std::string_view text);
/// "2,2,3" -> {2,2,3}
std::vector<int> parse_radices(std::string_view text);
std::string format_radices(const std::vector<int>& radices);

}  // namespace permideal
